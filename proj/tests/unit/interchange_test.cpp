#include <gtest/gtest.h>

#include "mnum/interchange.hpp"
#include "support/errc.hpp"
#include "support/paper_examples.hpp"

namespace {

using namespace mnum;

TEST(Interchange, CanonicalOutput)
{
    Document doc{from_components(2, {{{1, 1}, 2}, {{0, 0}, 1}}), std::nullopt};
    EXPECT_EQ(write_document(doc), "{\n"
                                   "  \"dim\": 2,\n"
                                   "  \"entries\": [\n"
                                   "    [[0, 0], 1],\n"
                                   "    [[1, 1], 2]\n"
                                   "  ]\n"
                                   "}\n");
    EXPECT_EQ(write_document({empty(3), std::nullopt}), "{\n  \"dim\": 3,\n  \"entries\": []\n}\n");
}

TEST(Interchange, ReaderCanonicalizes)
{
    auto doc = read_document(R"({"entries": [[[1,1],2],[[0,0],0],[[1,1],3],[[0,2],"7"]], "dim": 2})");
    EXPECT_EQ(doc.value, from_components(2, {{{0, 2}, 7}, {{1, 1}, 5}}));
    EXPECT_FALSE(doc.domain_base.has_value());
}

TEST(Interchange, RoundTripWithDomainBase)
{
    DomainBase g({{"form", {"cube", "pyramid", "sphere", "cone"}}, {"color", {"black", "white", "red", "green", "blue"}}});
    Document doc{mnum::testing::objects_2d(), g};
    auto text = write_document(doc);
    EXPECT_NE(text.find("\"domain_base\""), std::string::npos);
    EXPECT_EQ(read_document(text), doc);
    EXPECT_EQ(write_document(read_document(text)), text);
}

TEST(Interchange, BigMultiplicitiesAsStrings)
{
    auto big = Natural::parse("123456789012345678901234567890");
    Document doc{from_components(1, {{{0}, big}, {{1}, 5}}), std::nullopt};
    auto text = write_document(doc);
    EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
    EXPECT_NE(text.find("[[1], 5]"), std::string::npos);
    EXPECT_EQ(read_document(text), doc);
}

TEST(Interchange, Errors)
{
    EXPECT_ERRC(read_document("{"), Errc::malformed_document);
    EXPECT_ERRC(read_document("[]"), Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"entries": []})"), Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"dim": 0, "entries": []})"), Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"dim": 2, "entries": [[[0], 1]]})"), Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"dim": 2, "entries": [[[0, -1], 1]]})"), Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"dim": 2, "entries": [[[0, 0], "x"]]})"), Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"dim": 2, "entries": [], "extra": 1})"), Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"dim": 1, "entries": [[[3], 1]], "domain_base": [{"name": "a", "elements": ["x"]}]})"),
                Errc::invalid_document);
    EXPECT_ERRC(read_document(R"({"dim": 1, "entries": [], "domain_base": [{"name": "a", "elements": ["x", "x"]}]})"),
                Errc::invalid_document);
}

} // namespace
