// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mnum/domain_base.hpp"
#include "mnum/lang/eval.hpp"
#include "mnum/lang/parser.hpp"
#include "mnum/lang/render.hpp"
#include "mnum/oracle.hpp"
#include "mnum/semiring.hpp"
#include "mnum/succession.hpp"
#include "support/generators.hpp"
#include "support/run_process.hpp"

namespace {

using namespace mnum;

struct Outcome {
    std::vector<std::string> failures;
    std::string summary;

    void require(bool ok, const std::string& what)
    {
        if (!ok && failures.size() < 5) {
            failures.push_back(what);
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Outcome&)> run;
};

// "15:1,23:11" -> components with 1-based digit subscripts turned 0-based.
Polymset from_subscripts(std::size_t dim, const std::string& text)
{
    std::vector<Component> comps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        std::vector<std::uint64_t> coords;
        for (std::size_t k = 0; k < colon; ++k) {
            coords.push_back(static_cast<std::uint64_t>(item[k] - '1'));
        }
        comps.push_back({MultiIndex(coords), Natural::parse(item.substr(colon + 1))});
    }
    return from_components(dim, std::move(comps));
}

// Matrix displays put index (0,0) at the bottom right: the first coordinate
// grows leftward along a row, the second grows upward along a column.
Polymset from_display(const std::vector<std::vector<std::uint64_t>>& rows)
{
    std::vector<Component> comps;
    const std::uint64_t height = rows.size();
    const std::uint64_t width = rows.front().size();
    for (std::uint64_t r = 0; r < height; ++r) {
        for (std::uint64_t c = 0; c < width; ++c) {
            comps.push_back({MultiIndex{width - 1 - c, height - 1 - r}, rows[r][c]});
        }
    }
    return from_components(2, std::move(comps));
}

void paper_examples(Outcome& out)
{
    // Three attributes, built from the prose through label resolution.
    DomainBase g3({{"form", {"cube", "pyramid", "sphere", "cone", "cylinder"}},
                   {"material", {"metal", "plastic", "paper"}},
                   {"color", {"black", "white", "red", "yellow", "green", "blue"}}});
    auto a3 = from_components(3, {{g3.resolve({"cube", "plastic", "blue"}), 1},
                                  {g3.resolve({"sphere", "metal", "black"}), 3},
                                  {g3.resolve({"cone", "paper", "yellow"}), 7},
                                  {g3.resolve({"cylinder", "metal", "black"}), 5}});
    out.require(a3 == from_subscripts(3, "126:1,311:3,434:7,511:5"), "A3 labels vs subscripts");
    out.require(to_string(a3) == "{(0,1,5):1,(2,0,0):3,(3,2,3):7,(4,0,0):5}", "A3 canonical form " + to_string(a3));
    out.require(cardinality(a3) == Natural(16), "Card A3 = 16");
    out.require(height(a3) == Natural(7), "height A3 = 7");
    out.require(multiplicity(a3, {3, 2, 3}) == Natural(7), "alpha_434 = 7");

    // Generation chain over the same attributes.
    auto cube = sc(empty(3), g3.resolve({"cube", "plastic", "blue"}));
    auto cone = g3.resolve({"cone", "paper", "yellow"});
    out.require(cube == from_subscripts(3, "126:1"), "Sc_126(0)");
    out.require(sc(cube, {0, 1, 5}) == from_subscripts(3, "126:2"), "Sc_126^2(0)");
    out.require(sc_pow(empty(3), {0, 1, 5}, Natural(2)) == from_subscripts(3, "126:2"), "Sc_126^2 as power");
    out.require(sc(cube, cone) == from_subscripts(3, "126:1,434:1"), "Sc_434(Sc_126(0))");
    out.require(generate(3, {{0, 1, 5}, {3, 2, 3}}) == from_subscripts(3, "126:1,434:1"), "generate chain");

    // Two attributes: subscript lists against the matrix displays.
    auto a2 = from_subscripts(2, "15:1,23:11,31:3,44:7,41:5");
    auto b2 = from_subscripts(2, "15:1,23:11,31:3,44:7,41:5,22:1");
    auto d2 = from_subscripts(2, "15:1,23:10,31:3,44:7,41:5");
    out.require(a2 == from_display({{0, 0, 0, 1}, {7, 0, 0, 0}, {0, 0, 11, 0}, {0, 0, 0, 0}, {5, 3, 0, 0}}),
                "A2 matrix");
    out.require(b2 == from_display({{0, 0, 0, 1}, {7, 0, 0, 0}, {0, 0, 11, 0}, {0, 0, 1, 0}, {5, 3, 0, 0}}),
                "B2 matrix");
    out.require(d2 == from_display({{0, 0, 0, 1}, {7, 0, 0, 0}, {0, 0, 10, 0}, {0, 0, 0, 0}, {5, 3, 0, 0}}),
                "D2 matrix");
    out.require(to_string(a2) == "{(0,4):1,(1,2):11,(2,0):3,(3,0):5,(3,3):7}", "A2 canonical form " + to_string(a2));
    out.require(sc(a2, {1, 1}) == b2, "B2 = Sc_22(A2)");
    out.require(pd(a2, {1, 2}) == d2, "D2 = Pd_23(A2)");
    out.require(is_immediate_successor(b2, a2), "B2 immediate successor of A2");
    out.require(is_immediate_predecessor(d2, a2), "D2 immediate predecessor of A2");
    out.require(!is_immediate_successor(a2, b2) && !is_immediate_predecessor(a2, d2), "relations are one-way");
    out.require(cardinality(a2) == Natural(27) && cardinality(b2) == Natural(28) && cardinality(d2) == Natural(26),
                "cardinalities 27/28/26");
    out.require(height(a2) == Natural(11), "height A2 = 11");

    // Cross-index collision, read off the 2-number displays.
    auto a = from_display({{0, 0}, {1, 0}});
    auto b = from_display({{0, 1}, {0, 0}});
    auto both = from_display({{0, 1}, {1, 0}});
    out.require(a != b, "collision operands differ");
    out.require(sc(a, {0, 1}) == both && sc(b, {1, 0}) == both, "Sc_01(A) = Sc_10(B)");

    // Unit products and the left identity.
    out.require(mul(unit({1, 2}), unit({2, 1})) == unit({3, 3}), "1_12 * 1_21 = 1_33");
    for (std::uint64_t i = 0; i < 4; ++i) {
        for (std::uint64_t j = 0; j < 4; ++j) {
            for (std::uint64_t p = 0; p < 4; ++p) {
                for (std::uint64_t q = 0; q < 4; ++q) {
                    out.require(mul(unit({i, j}), unit({p, q})) == unit({i + p, j + q}), "unit product");
                }
            }
        }
    }
    for (const auto& x : {a2, b2, d2, a, b, both, zero(2)}) {
        out.require(mul(one(2), x) == x, "1_00 * A = A on " + to_string(x));
    }
    for (const auto& x : oracle::materialize_universe({2, {1, 1}, 2})) {
        out.require(mul(one(2), x) == x, "1_00 * A = A on " + to_string(x));
    }
    out.summary = "3-attribute, 2-attribute, chain, collision, unit-product and identity examples";
}

void tiny_universe_laws(Outcome& out)
{
    auto report = oracle::check_laws({2, {1, 1}, 1});
    std::size_t exhaustive = 0;
    for (const auto& r : report.results) {
        out.require(r.passed, r.law + ": " + r.counterexample.value_or(""));
        exhaustive += r.coverage == oracle::Coverage::exhaustive;
    }
    out.require(exhaustive == report.results.size(), "every law covered exhaustively");
    out.summary = std::to_string(report.results.size()) + " laws, " + std::to_string(exhaustive) + " exhaustive";
}

void oracle_equivalence(Outcome& out)
{
    auto all = oracle::materialize_universe({2, {1, 1}, 2});
    out.require(all.size() == 81, "universe has 81 elements");
    std::uint64_t pairs = 0;
    for (const auto& a : all) {
        for (const auto& b : all) {
            out.require(oracle::mul_recursive(a, b) == mul(a, b), "mul " + to_string(a) + " " + to_string(b));
            out.require(oracle::add_via_successors(a, b) == add(a, b), "add " + to_string(a) + " " + to_string(b));
            ++pairs;
        }
    }
    out.summary = std::to_string(pairs) + " pairs";
}

void randomized_laws(Outcome& out, std::size_t dim, std::uint64_t extent, int triples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (int t = 0; t < triples; ++t) {
        auto a = testing::random_polymset_any_density(rng, dim, extent, 1'000'000);
        auto b = testing::random_polymset_any_density(rng, dim, extent, 1'000'000);
        auto c = testing::random_polymset_any_density(rng, dim, extent, 1'000'000);
        const std::string where = " at triple " + std::to_string(t);
        auto ab = mul(a, b);
        out.require(add(add(a, b), c) == add(a, add(b, c)), "+ associative" + where);
        out.require(add(a, b) == add(b, a), "+ commutative" + where);
        out.require(mul(ab, c) == mul(a, mul(b, c)), "* associative" + where);
        out.require(ab == mul(b, a), "* commutative" + where);
        out.require(mul(a, add(b, c)) == add(ab, mul(a, c)), "left distributive" + where);
        out.require(mul(add(a, b), c) == add(mul(a, c), mul(b, c)), "right distributive" + where);
        // Cancellation: c is recovered from a + c as the unique difference over a.
        auto sum = add(a, c);
        out.require((add(b, c) == sum) == (a == b), "cancellation" + where);
        auto cmp = compare_tetratomy(sum, a);
        out.require(c.empty() ? std::holds_alternative<Equal>(cmp)
                              : std::holds_alternative<GreaterBy>(cmp) && std::get<GreaterBy>(cmp).witness == c,
                    "cancellation witness" + where);
        out.require(cardinality(ab) == cardinality(a) * cardinality(b), "Card(A*B)" + where);
        out.require(cardinality(sum) == cardinality(a) + cardinality(c), "Card(A+C)" + where);
        for (std::size_t axis = 0; axis < dim; ++axis) {
            out.require(reduce(ab, axis) == mul(reduce(a, axis), reduce(b, axis)), "reduce(A*B)" + where);
        }
    }
    out.summary = std::to_string(triples) + " triples, dim " + std::to_string(dim) + ", grid extent " +
                  std::to_string(extent) + ", multiplicities <= 10^6";
}

std::vector<Split> random_split(std::mt19937_64& rng, const Natural& m)
{
    // Cut m into up to four parts at distinct shuffled coordinates.
    std::uint64_t total = *m.to_u64();
    std::uniform_int_distribution<std::uint64_t> cut(0, total);
    std::vector<std::uint64_t> cuts{0, total, cut(rng), cut(rng), cut(rng)};
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::uint64_t> coords{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(coords.begin(), coords.end(), rng);
    std::vector<Split> parts;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        parts.push_back({coords[k], cuts[k + 1] - cuts[k]});
    }
    return parts;
}

void round_trips(Outcome& out)
{
    std::mt19937_64 rng(20240601);
    auto parse_value = [](const std::string& text) {
        return std::get<Polymset>(lang::eval(*lang::parse_expression(text), {}));
    };
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    for (int k = 0; k < 1000; ++k) {
        auto a = testing::random_polymset_any_density(rng, 2, 6, 1'000'000'000);
        out.require(parse_value(lang::render(a, lang::Style::sparse)) == a, "sparse round trip " + to_string(a));
        out.require(parse_value(lang::render(a, lang::Style::matrix)) == a, "matrix round trip " + to_string(a));
    }
    for (int k = 0; k < 1000; ++k) {
        std::size_t dim = dims(rng);
        auto a = testing::random_polymset_any_density(rng, dim, 3, 20);
        out.require(generate(dim, trace_of(a).steps) == a, "generate(trace_of) " + to_string(a));
        out.require(parse_value(lang::render(a, lang::Style::sparse)) == a, "sparse round trip " + to_string(a));
    }
    for (int k = 0; k < 1000; ++k) {
        std::size_t dim = dims(rng);
        auto a = testing::random_polymset_any_density(rng, dim, 4, 1000);
        auto i = testing::random_index(rng, dim, 5);
        out.require(pd(sc(a, i), i) == a, "pd(sc) " + to_string(a));
        if (!a.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
            auto j = a.components()[pick(rng)].index;
            out.require(sc(pd(a, j), j) == a, "sc(pd) " + to_string(a));
        }
        std::uniform_int_distribution<std::size_t> axes(0, dim);
        std::size_t axis = axes(rng);
        Splitter splitter = [&rng](const MultiIndex&, const Natural& m) { return random_split(rng, m); };
        auto up = produce(a, axis, splitter);
        out.require(up.dim() == dim + 1 && reduce(up, axis) == a, "reduce(produce) " + to_string(a));
        out.require(reduce(produce(a, axis, delta_splitter()), axis) == a, "reduce(produce delta) " + to_string(a));
    }
    out.summary = "1000 cases each: sparse and matrix render, trace, sc/pd, produce/reduce";
}

void mutation_sensitivity(Outcome& out)
{
    auto r = testing::run_process(std::string(MNUM_BINARY) + " check-laws --dim 2 --max-index 1,1 --max-mult 1"
                                                             " --inject-fault pointwise-mul");
    out.require(r.exit_code == 3, "exit code " + std::to_string(r.exit_code) + ", expected 3");
    std::istringstream lines(r.output);
    std::string line;
    std::string hit;
    while (std::getline(lines, line)) {
        bool relevant = line.find("distributive") != std::string::npos || line.find("identity") != std::string::npos;
        if (line.rfind("FAIL", 0) == 0 && relevant && line.find("counterexample") != std::string::npos) {
            hit = line;
            break;
        }
    }
    out.require(!hit.empty(), "no distributivity or identity counterexample reported");
    out.summary = hit;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "paper-example fidelity", 1.0, paper_examples},
        {2, "exhaustive laws, tiny universe", 10.0, tiny_universe_laws},
        {3, "oracle equivalence, 81 elements", 60.0, oracle_equivalence},
        {4, "randomized laws, 6x6 grid", 60.0, [](Outcome& o) { randomized_laws(o, 2, 6, 10'000, 4); }},
        {5, "randomized laws, 4x4x4 grid", 60.0, [](Outcome& o) { randomized_laws(o, 3, 4, 2'000, 5); }},
        {6, "round-trips", 60.0, round_trips},
        {7, "mutation sensitivity", 60.0, mutation_sensitivity},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.failures.push_back(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            out.failures.push_back("took longer than " + std::to_string(c.limit_seconds) + " s");
        }
        bool passed = out.failures.empty();
        failed += !passed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, c.limit_seconds);
        std::cout << (passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ")";
        if (!out.summary.empty()) {
            std::cout << ": " << out.summary;
        }
        std::cout << '\n';
        for (const auto& f : out.failures) {
            std::cout << "    " << f << '\n';
        }
        std::cout.flush();
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
