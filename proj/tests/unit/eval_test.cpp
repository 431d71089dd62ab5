#include <gtest/gtest.h>

#include "mnum/lang/eval.hpp"
#include "mnum/lang/parser.hpp"
#include "mnum/lang/render.hpp"
#include "support/paper_examples.hpp"

namespace {

using namespace mnum;
using namespace mnum::lang;

Value run(std::string_view text, Environment env = {})
{
    return eval(*parse_expression(text), env);
}

std::string shown(std::string_view text) { return render(run(text), Style::sparse); }

std::string eval_error(std::string_view text, SourcePos* pos = nullptr)
{
    try {
        run(text);
    } catch (const EvalError& e) {
        if (pos != nullptr) {
            *pos = e.pos();
        }
        return e.what();
    }
    ADD_FAILURE() << "evaluated: " << text;
    return {};
}

TEST(Eval, Examples)
{
    EXPECT_EQ(shown("{(1,2):1} * {(2,1):1}"), "{(3,3):1}");
    EXPECT_EQ(shown("card({(0,4):1,(1,2):11,(2,0):3,(3,3):7,(3,0):5})"), "27");
    EXPECT_EQ(shown("cmp(zero(2), one(2))"), "LessBy({(0,0):1})");
    EXPECT_EQ(shown("[[1,1]] * [[1,1]]"), "{(0,0):1,(0,1):2,(0,2):1}");
}

TEST(Eval, Functions)
{
    EXPECT_EQ(shown("hgt([[1,5],[2,0]])"), "5");
    EXPECT_EQ(shown("supp([[1,5],[2,0]])"), "{(0,0):1,(0,1):1,(1,0):1}");
    EXPECT_EQ(shown("sc(zero(3), 0, 1, 5)"), "{(0,1,5):1}");
    EXPECT_EQ(shown("pd({(1,2):11}, 1, 2)"), "{(1,2):10}");
    EXPECT_EQ(shown("shift([[2],[1]], 1, 1)"), "{(1,1):2,(2,1):1}");
    EXPECT_EQ(shown("reduce({(0,4):1,(1,2):11,(2,0):3,(3,3):7,(3,0):5}, 1)"), "{(0):1,(1):11,(2):3,(3):12}");
    EXPECT_EQ(shown("unit(2, 3)"), "{(2,3):1}");
    EXPECT_EQ(shown("one(3)"), "{(0,0,0):1}");
    EXPECT_EQ(shown("zero(2)"), "{dim=2}");
    EXPECT_EQ(shown("{dim=2} + [[1]]"), "{(0,0):1}");
}

TEST(Eval, SetOperators)
{
    EXPECT_EQ(shown("[[2,0]] | [[1,3]]"), "{(0,0):2,(0,1):3}");
    EXPECT_EQ(shown("[[2,0]] & [[1,3]]"), "{(0,0):1}");
    EXPECT_EQ(shown("[[3,0]] - [[1,2]]"), "{(0,0):2}");
    EXPECT_EQ(shown("[[3,0]] ^ [[1,2]]"), "{(0,0):2,(0,1):2}");
}

TEST(Eval, Scalars)
{
    EXPECT_EQ(shown("card([[2,3]]) * 2 + 1"), "11");
    EXPECT_EQ(shown("1 - 5"), "0");
    EXPECT_EQ(shown("3 ^ 5"), "2");
    EXPECT_EQ(shown("3 | 5"), "5");
    EXPECT_EQ(shown("3 & 5"), "3");
}

TEST(Eval, Environment)
{
    Environment env;
    auto prog = parse_program("a = [[1,1]]\nb = a * a\ncard(b)\n");
    EXPECT_FALSE(execute(prog[0], env).has_value());
    EXPECT_FALSE(execute(prog[1], env).has_value());
    auto v = execute(prog[2], env);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(std::get<Natural>(*v), Natural(4));
    EXPECT_EQ(std::get<Polymset>(env.at("b")), mul(from_components(2, {{{0, 0}, 1}, {{0, 1}, 1}}),
                                                     from_components(2, {{{0, 0}, 1}, {{0, 1}, 1}})));
}

TEST(Eval, Errors)
{
    SourcePos pos;
    EXPECT_NE(eval_error("x + [[1]]", &pos).find("unbound-variable"), std::string::npos);
    EXPECT_EQ(pos, (SourcePos{1, 1}));

    EXPECT_NE(eval_error("sc({}, 0, 1)", &pos).find("no dimension"), std::string::npos);
    EXPECT_EQ(pos, (SourcePos{1, 4}));

    EXPECT_NE(eval_error("[[1]] + one(3)", &pos).find("dimension-mismatch"), std::string::npos);
    EXPECT_EQ(pos, (SourcePos{1, 7}));

    EXPECT_NE(eval_error("pd(zero(2), 0, 0)").find("no-such-copy"), std::string::npos);
    EXPECT_NE(eval_error("[[1]] + 1").find("type-error"), std::string::npos);
    EXPECT_NE(eval_error("card(2)").find("type-error"), std::string::npos);
    EXPECT_NE(eval_error("card()").find("takes 1 argument"), std::string::npos);
    EXPECT_NE(eval_error("frob(1)").find("unknown function"), std::string::npos);
    EXPECT_NE(eval_error("reduce([[1]], 2)").find("invalid-axis"), std::string::npos);
    EXPECT_NE(eval_error("unit(18446744073709551616)").find("number-overflow"), std::string::npos);
    EXPECT_NE(eval_error("zero(0)").find("invalid-dimension"), std::string::npos);
}

TEST(Eval, Pure)
{
    const char* text = "sc(shift([[1,2],[3,4]] * [[5]], 2, 0), 0, 0) | {(9,9):1}";
    EXPECT_EQ(shown(text), shown(text));
}

} // namespace
