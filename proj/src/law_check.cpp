#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include <json.hpp>

#include "mnum/error.hpp"
#include "mnum/oracle.hpp"
#include "mnum/semiring.hpp"
#include "mnum/succession.hpp"

namespace mnum::oracle {

namespace {

struct Inputs {
    std::array<const Polymset*, 3> p{};
    std::array<const MultiIndex*, 2> i{};

    const Polymset& A() const { return *p[0]; }
    const Polymset& B() const { return *p[1]; }
    const Polymset& C() const { return *p[2]; }
    const MultiIndex& I() const { return *i[0]; }
    const MultiIndex& J() const { return *i[1]; }
};

struct Law {
    std::string name;
    int polymsets;
    int indices;
    std::function<bool(const Inputs&)> holds;
};

std::string describe(const Law& law, const Inputs& in)
{
    static constexpr std::array<const char*, 3> pnames{"A", "B", "C"};
    static constexpr std::array<const char*, 2> inames{"i", "j"};
    std::string out;
    for (int k = 0; k < law.polymsets; ++k) {
        out += (out.empty() ? "" : ", ") + std::string(pnames[k]) + "=" + to_string(*in.p[k]);
    }
    for (int k = 0; k < law.indices; ++k) {
        out += (out.empty() ? "" : ", ") + std::string(inames[k]) + "=" + to_string(*in.i[k]);
    }
    return out;
}

// n^k with saturation at the 64-bit maximum.
std::uint64_t saturating_pow(std::uint64_t n, int k)
{
    std::uint64_t r = 1;
    for (int t = 0; t < k; ++t) {
        if (n != 0 && r > std::numeric_limits<std::uint64_t>::max() / n) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= n;
    }
    return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

class Runner {
public:
    Runner(const UniverseSpec& spec, const LawCheckOptions& options)
        : universe_(materialize_universe(spec)),
          grid_(grid_indices(spec)),
          label_(to_string(spec)),
          options_(options)
    {
    }

    LawResult run(const Law& law, std::uint64_t ordinal) const
    {
        LawResult result;
        result.law = law.name;
        result.universe = label_;

        const std::uint64_t n = universe_.size();
        const std::uint64_t g = grid_.size();
        const std::uint64_t total = saturating_mul(saturating_pow(n, law.polymsets),
                                                   saturating_pow(g, law.indices));
        const int arity = law.polymsets + law.indices;
        std::vector<std::uint64_t> radix;
        for (int k = 0; k < law.polymsets; ++k) {
            radix.push_back(n);
        }
        for (int k = 0; k < law.indices; ++k) {
            radix.push_back(g);
        }

        auto evaluate = [&](const std::vector<std::uint64_t>& pick) {
            Inputs in;
            for (int k = 0; k < law.polymsets; ++k) {
                in.p[k] = &universe_[pick[k]];
            }
            for (int k = 0; k < law.indices; ++k) {
                in.i[k] = &grid_[pick[law.polymsets + k]];
            }
            ++result.evaluations;
            if (!law.holds(in)) {
                result.passed = false;
                result.counterexample = describe(law, in);
            }
            return result.passed;
        };

        std::vector<std::uint64_t> pick(arity, 0);
        if (total <= options_.budget) {
            result.coverage = Coverage::exhaustive;
            if (total == 0) {
                return result;
            }
            // Mixed-radix counter, last position fastest.
            while (evaluate(pick)) {
                int k = arity - 1;
                for (; k >= 0; --k) {
                    if (++pick[k] < radix[k]) {
                        break;
                    }
                    pick[k] = 0;
                }
                if (k < 0) {
                    break;
                }
            }
        } else {
            result.coverage = Coverage::sampled;
            std::mt19937_64 rng(options_.seed + ordinal);
            for (std::uint64_t s = 0; s < options_.budget; ++s) {
                for (int k = 0; k < arity; ++k) {
                    pick[k] = std::uniform_int_distribution<std::uint64_t>(0, radix[k] - 1)(rng);
                }
                if (!evaluate(pick)) {
                    break;
                }
            }
        }
        return result;
    }

private:
    std::vector<Polymset> universe_;
    std::vector<MultiIndex> grid_;
    std::string label_;
    const LawCheckOptions& options_;
};

std::vector<Law> build_laws(std::size_t dim, const Arithmetic& ar)
{
    const auto& add = ar.add;
    const auto& mul = ar.mul;
    const Polymset zero_value = zero(dim);
    const Polymset one_value = one(dim);

    std::vector<Law> laws;

    // Successor axioms and their consequences.
    laws.push_back({"zero_is_not_a_successor", 1, 1, [zero_value](const Inputs& in) {
                        return sc(in.A(), in.I()) != zero_value;
                    }});
    laws.push_back({"successor_is_a_function", 2, 1, [](const Inputs& in) {
                        return in.A() != in.B() || sc(in.A(), in.I()) == sc(in.B(), in.I());
                    }});
    laws.push_back({"distinct_indices_give_distinct_successors", 1, 2, [](const Inputs& in) {
                        return in.I() == in.J() || sc(in.A(), in.I()) != sc(in.A(), in.J());
                    }});
    laws.push_back({"successor_is_injective", 2, 1, [](const Inputs& in) {
                        return sc(in.A(), in.I()) != sc(in.B(), in.I()) || in.A() == in.B();
                    }});
    laws.push_back({"every_element_is_generated_from_zero", 1, 0, [](const Inputs& in) {
                        return generate(in.A().dim(), trace_of(in.A()).steps) == in.A();
                    }});
    laws.push_back({"nonzero_has_unique_predecessor", 1, 1, [](const Inputs& in) {
                        const auto& a = in.A();
                        if (a.empty()) {
                            return true;
                        }
                        // Some index must have a predecessor.
                        if (!is_immediate_predecessor(pd(a, a.components().front().index), a)) {
                            return false;
                        }
                        if (multiplicity(a, in.I()).is_zero()) {
                            return true;
                        }
                        return sc(pd(a, in.I()), in.I()) == a;
                    }});
    laws.push_back({"successors_differ_iff_arguments_differ", 2, 1, [](const Inputs& in) {
                        return (sc(in.A(), in.I()) != sc(in.B(), in.I())) == (in.A() != in.B());
                    }});
    laws.push_back({"successor_differs_from_argument", 1, 1, [](const Inputs& in) {
                        return sc(in.A(), in.I()) != in.A();
                    }});
    laws.push_back({"successors_commute", 1, 2, [](const Inputs& in) {
                        return sc(sc(in.A(), in.I()), in.J()) == sc(sc(in.A(), in.J()), in.I());
                    }});

    // Addition.
    laws.push_back({"add_unit_is_successor", 1, 1, [add](const Inputs& in) {
                        return add(in.A(), unit(in.I())) == sc(in.A(), in.I());
                    }});
    laws.push_back({"add_successor_recursion", 2, 1, [add](const Inputs& in) {
                        return add(in.A(), sc(in.B(), in.I())) == sc(add(in.A(), in.B()), in.I());
                    }});
    laws.push_back({"add_associative", 3, 0, [add](const Inputs& in) {
                        return add(add(in.A(), in.B()), in.C()) == add(in.A(), add(in.B(), in.C()));
                    }});
    laws.push_back({"add_commutative", 2, 0, [add](const Inputs& in) {
                        return add(in.A(), in.B()) == add(in.B(), in.A());
                    }});
    laws.push_back({"add_identity", 1, 0, [add, zero_value](const Inputs& in) {
                        return add(in.A(), zero_value) == in.A() && add(zero_value, in.A()) == in.A();
                    }});
    // A non-zero addend always changes the sum. (With the zero addend on the
    // other side, 0 + B = B, so the condition must sit on the added term.)
    laws.push_back({"nonzero_addend_changes_sum", 2, 0, [add](const Inputs& in) {
                        return in.B().empty() || add(in.A(), in.B()) != in.A();
                    }});
    laws.push_back({"add_cancellation", 3, 0, [add](const Inputs& in) {
                        return add(in.A(), in.C()) != add(in.B(), in.C()) || in.A() == in.B();
                    }});
    laws.push_back({"tetratomy", 2, 0, [add](const Inputs& in) {
                        const auto& a = in.A();
                        const auto& b = in.B();
                        // Classify independently of compare_tetratomy: by cancellation the
                        // only candidate witness is the saturating difference.
                        auto c = msub(a, b);
                        auto d = msub(b, a);
                        const bool equal = a == b;
                        const bool greater = !c.empty() && add(b, c) == a;
                        const bool less = !d.empty() && add(a, d) == b;
                        const bool incomparable = !equal && !greater && !less;
                        if (int(equal) + int(greater) + int(less) + int(incomparable) != 1) {
                            return false;
                        }
                        auto r = compare_tetratomy(a, b);
                        if (auto* g = std::get_if<GreaterBy>(&r)) {
                            return greater && !g->witness.empty() && add(b, g->witness) == a;
                        }
                        if (auto* l = std::get_if<LessBy>(&r)) {
                            return less && !l->witness.empty() && add(a, l->witness) == b;
                        }
                        if (std::holds_alternative<Equal>(r)) {
                            return equal;
                        }
                        return incomparable;
                    }});

    // Multiplication.
    laws.push_back({"unit_product", 0, 2, [mul](const Inputs& in) {
                        return mul(unit(in.I()), unit(in.J())) == unit(in.I() + in.J());
                    }});
    laws.push_back({"mul_successor_recursion", 2, 1, [add, mul](const Inputs& in) {
                        return mul(in.A(), sc(in.B(), in.I())) ==
                               add(mul(in.A(), in.B()), shift(in.A(), in.I()));
                    }});
    laws.push_back({"mul_associative", 3, 0, [mul](const Inputs& in) {
                        return mul(mul(in.A(), in.B()), in.C()) == mul(in.A(), mul(in.B(), in.C()));
                    }});
    laws.push_back({"mul_commutative", 2, 0, [mul](const Inputs& in) {
                        return mul(in.A(), in.B()) == mul(in.B(), in.A());
                    }});
    laws.push_back({"right_distributive", 3, 0, [add, mul](const Inputs& in) {
                        return mul(add(in.A(), in.B()), in.C()) ==
                               add(mul(in.A(), in.C()), mul(in.B(), in.C()));
                    }});
    laws.push_back({"left_distributive", 3, 0, [add, mul](const Inputs& in) {
                        return mul(in.C(), add(in.A(), in.B())) ==
                               add(mul(in.C(), in.A()), mul(in.C(), in.B()));
                    }});
    laws.push_back({"multiplicative_identity", 1, 0, [mul, one_value](const Inputs& in) {
                        return mul(one_value, in.A()) == in.A() && mul(in.A(), one_value) == in.A();
                    }});
    laws.push_back({"unit_multiplication_is_shift", 1, 1, [mul](const Inputs& in) {
                        return mul(unit(in.I()), in.A()) == shift(in.A(), in.I());
                    }});
    laws.push_back({"zero_annihilates", 1, 0, [mul, zero_value](const Inputs& in) {
                        return mul(in.A(), zero_value) == zero_value && mul(zero_value, in.A()) == zero_value;
                    }});

    // Morphisms and shift laws.
    laws.push_back({"cardinality_of_sum", 2, 0, [add](const Inputs& in) {
                        return cardinality(add(in.A(), in.B())) == cardinality(in.A()) + cardinality(in.B());
                    }});
    laws.push_back({"cardinality_of_product", 2, 0, [mul](const Inputs& in) {
                        return cardinality(mul(in.A(), in.B())) == cardinality(in.A()) * cardinality(in.B());
                    }});
    laws.push_back({"reduce_of_sum", 2, 0, [add, dim](const Inputs& in) {
                        for (std::size_t ax = 0; dim >= 2 && ax < dim; ++ax) {
                            if (reduce(add(in.A(), in.B()), ax) != msum(reduce(in.A(), ax), reduce(in.B(), ax))) {
                                return false;
                            }
                        }
                        return true;
                    }});
    laws.push_back({"reduce_of_product", 2, 0, [mul, dim](const Inputs& in) {
                        for (std::size_t ax = 0; dim >= 2 && ax < dim; ++ax) {
                            if (reduce(mul(in.A(), in.B()), ax) != mnum::mul(reduce(in.A(), ax), reduce(in.B(), ax))) {
                                return false;
                            }
                        }
                        return true;
                    }});
    laws.push_back({"shift_composes", 1, 2, [](const Inputs& in) {
                        return shift(shift(in.A(), in.I()), in.J()) == shift(in.A(), in.I() + in.J());
                    }});
    laws.push_back({"shift_distributes_over_add", 2, 1, [add](const Inputs& in) {
                        return shift(add(in.A(), in.B()), in.I()) ==
                               add(shift(in.A(), in.I()), shift(in.B(), in.I()));
                    }});
    laws.push_back({"shift_commutes_with_mul", 2, 1, [mul](const Inputs& in) {
                        return mul(shift(in.A(), in.I()), in.B()) == shift(mul(in.A(), in.B()), in.I());
                    }});

    // Agreement with the recursive reference definitions.
    laws.push_back({"add_matches_successor_recursion", 2, 0, [add](const Inputs& in) {
                        return add(in.A(), in.B()) == add_via_successors(in.A(), in.B());
                    }});
    laws.push_back({"mul_matches_recursive_definition", 2, 0, [mul](const Inputs& in) {
                        return mul(in.A(), in.B()) == mul_recursive(in.A(), in.B());
                    }});
    return laws;
}

} // namespace

bool LawReport::all_passed() const
{
    return std::ranges::all_of(results, &LawResult::passed);
}

const LawResult* LawReport::find(const std::string& law) const
{
    auto it = std::ranges::find(results, law, &LawResult::law);
    return it == results.end() ? nullptr : &*it;
}

LawReport check_laws(const UniverseSpec& spec, const LawCheckOptions& options)
{
    Runner runner(spec, options);
    LawReport report;
    auto laws = build_laws(spec.dim, options.arithmetic);
    for (std::uint64_t k = 0; k < laws.size(); ++k) {
        LawResult r;
        try {
            r = runner.run(laws[k], k);
        } catch (const Error& e) {
            // A law that throws (say, a mutated operation returning the wrong
            // dimension) counts as failed rather than aborting the whole run.
            r.law = laws[k].name;
            r.universe = to_string(spec);
            r.passed = false;
            r.counterexample = std::string("raised ") + e.what();
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

std::string to_json(const LawReport& report)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json entry;
        entry["law"] = r.law;
        entry["universe"] = r.universe;
        entry["status"] = r.passed ? "pass" : "fail";
        entry["coverage"] = r.coverage == Coverage::exhaustive ? "exhaustive" : "sampled";
        entry["evaluations"] = r.evaluations;
        if (r.counterexample) {
            entry["counterexample"] = *r.counterexample;
        }
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

} // namespace mnum::oracle
