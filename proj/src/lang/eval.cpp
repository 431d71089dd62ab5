#include "mnum/lang/eval.hpp"

#include "mnum/error.hpp"
#include "mnum/succession.hpp"

namespace mnum::lang {

namespace {

std::string kind_name(const Value& v)
{
    switch (v.index()) {
    case 0: return "polymset";
    case 1: return "number";
    default: return "comparison result";
    }
}

class Evaluator {
public:
    explicit Evaluator(const Environment& env) : env_(env) {}

    Value operator()(const Expr& e) const
    {
        try {
            return std::visit([&](const auto& node) { return eval_node(e.pos, node); }, e.node);
        } catch (const Error& err) {
            throw EvalError(e.pos, err.what());
        }
    }

private:
    Value eval_node(SourcePos pos, const Literal& lit) const
    {
        if (!lit.value) {
            throw EvalError(pos, "'{}' has no dimension; write zero(m) or {dim=m}");
        }
        return *lit.value;
    }

    Value eval_node(SourcePos, const Number& n) const { return n.value; }

    Value eval_node(SourcePos pos, const Var& v) const
    {
        auto it = env_.find(v.name);
        if (it == env_.end()) {
            throw EvalError(pos, "unbound-variable: '" + v.name + "'");
        }
        return it->second;
    }

    Value eval_node(SourcePos pos, const Binary& b) const
    {
        Value lhs = (*this)(*b.lhs);
        Value rhs = (*this)(*b.rhs);
        if (auto* x = std::get_if<Polymset>(&lhs)) {
            if (auto* y = std::get_if<Polymset>(&rhs)) {
                switch (b.op) {
                case BinaryOp::add: return add(*x, *y);
                case BinaryOp::mul: return mul(*x, *y);
                case BinaryOp::sub: return msub(*x, *y);
                case BinaryOp::unite: return unite(*x, *y);
                case BinaryOp::intersect: return intersect(*x, *y);
                case BinaryOp::symdiff: return symdiff(*x, *y);
                }
            }
        }
        // Numbers behave as single-point multiplicities.
        if (auto* x = std::get_if<Natural>(&lhs)) {
            if (auto* y = std::get_if<Natural>(&rhs)) {
                switch (b.op) {
                case BinaryOp::add: return *x + *y;
                case BinaryOp::mul: return *x * *y;
                case BinaryOp::sub: return saturating_sub(*x, *y);
                case BinaryOp::unite: return std::max(*x, *y);
                case BinaryOp::intersect: return std::min(*x, *y);
                case BinaryOp::symdiff: return abs_diff(*x, *y);
                }
            }
        }
        throw EvalError(pos, std::string("type-error: operator '") + symbol(b.op) + "' cannot combine a " +
                                 kind_name(lhs) + " with a " + kind_name(rhs));
    }

    Value eval_node(SourcePos pos, const Call& c) const
    {
        const std::string& f = c.function;
        auto arity = [&](std::size_t n) {
            if (c.args.size() != n) {
                throw EvalError(pos, "'" + f + "' takes " + std::to_string(n) + " argument" +
                                         (n == 1 ? "" : "s") + ", got " + std::to_string(c.args.size()));
            }
        };
        auto at_least = [&](std::size_t n) {
            if (c.args.size() < n) {
                throw EvalError(pos, "'" + f + "' takes at least " + std::to_string(n) + " argument" +
                                         (n == 1 ? "" : "s") + ", got " + std::to_string(c.args.size()));
            }
        };

        if (f == "card") {
            arity(1);
            return cardinality(polymset_arg(c, 0));
        }
        if (f == "hgt") {
            arity(1);
            return height(polymset_arg(c, 0));
        }
        if (f == "supp") {
            arity(1);
            return support(polymset_arg(c, 0));
        }
        if (f == "sc" || f == "pd" || f == "shift") {
            at_least(2);
            Polymset a = polymset_arg(c, 0);
            MultiIndex idx = index_args(c, 1);
            if (f == "sc") {
                return sc(a, idx);
            }
            return f == "pd" ? pd(a, idx) : shift(a, idx);
        }
        if (f == "reduce") {
            arity(2);
            Polymset a = polymset_arg(c, 0);
            return reduce(a, word_arg(c, 1));
        }
        if (f == "unit") {
            at_least(1);
            return unit(index_args(c, 0));
        }
        if (f == "zero" || f == "one") {
            arity(1);
            auto m = word_arg(c, 0);
            return f == "zero" ? zero(m) : one(m);
        }
        if (f == "cmp") {
            arity(2);
            Polymset a = polymset_arg(c, 0);
            Polymset b = polymset_arg(c, 1);
            return compare_tetratomy(a, b);
        }
        throw EvalError(pos, "unknown function '" + f + "'");
    }

    Polymset polymset_arg(const Call& c, std::size_t k) const
    {
        Value v = (*this)(*c.args[k]);
        if (auto* a = std::get_if<Polymset>(&v)) {
            return std::move(*a);
        }
        throw EvalError(c.args[k]->pos, "type-error: argument " + std::to_string(k + 1) + " of '" + c.function +
                                            "' must be a polymset, got a " + kind_name(v));
    }

    std::uint64_t word_arg(const Call& c, std::size_t k) const
    {
        Value v = (*this)(*c.args[k]);
        auto* n = std::get_if<Natural>(&v);
        if (n == nullptr) {
            throw EvalError(c.args[k]->pos, "type-error: argument " + std::to_string(k + 1) + " of '" +
                                                c.function + "' must be a number, got a " + kind_name(v));
        }
        auto w = n->to_u64();
        if (!w) {
            throw EvalError(c.args[k]->pos, "number-overflow: " + n->to_string() + " does not fit 64 bits");
        }
        return *w;
    }

    MultiIndex index_args(const Call& c, std::size_t first) const
    {
        std::vector<MultiIndex::value_type> coords;
        for (std::size_t k = first; k < c.args.size(); ++k) {
            coords.push_back(word_arg(c, k));
        }
        return MultiIndex(coords);
    }

    const Environment& env_;
};

} // namespace

Value eval(const Expr& e, const Environment& env)
{
    return Evaluator(env)(e);
}

std::optional<Value> execute(const Statement& s, Environment& env)
{
    Value v = eval(*s.expr, env);
    if (s.binding) {
        env.insert_or_assign(*s.binding, std::move(v));
        return std::nullopt;
    }
    return v;
}

} // namespace mnum::lang
