#include <gtest/gtest.h>

#include <filesystem>

#include "../support/oracle.hpp"
#include "ca2d/error.hpp"
#include "ca2d/io.hpp"

namespace {

using ca2d::Grid;
using ca2d::ImageFormat;

const oracle::Cells kSampleInput = {{0, 0, 1, 0}, {1, 1, 1, 0}, {1, 0, 1, 1}};

std::size_t parse_error_offset(std::string_view data) {
    try {
        ca2d::parse_pbm(data);
    } catch (const ca2d::ParseError& e) {
        EXPECT_EQ(e.code(), ca2d::Errc::parse_error);
        return e.offset();
    }
    ADD_FAILURE() << "no parse error";
    return 0;
}

TEST(Pbm, ParsesPlainText) {
    EXPECT_EQ(oracle::to_cells(ca2d::parse_pbm("P1 4 3 0 0 1 0 1 1 1 0 1 0 1 1")), kSampleInput);
    EXPECT_EQ(oracle::to_cells(ca2d::parse_pbm("P1\n# comment\n4 3\n0010\n1110\n1011\n")), kSampleInput);
}

TEST(Pbm, RoundTrip) {
    const Grid g = ca2d::random_grid(100, 100, 0.5, 77);
    EXPECT_EQ(ca2d::parse_pbm(ca2d::format_pbm(g, ImageFormat::p1)), g);
    EXPECT_EQ(ca2d::parse_pbm(ca2d::format_pbm(g, ImageFormat::p4)), g);
    const Grid odd = ca2d::random_grid(7, 13, 0.5, 78);
    EXPECT_EQ(ca2d::parse_pbm(ca2d::format_pbm(odd, ImageFormat::p4)), odd);
}

TEST(Pbm, BinaryLayout) {
    const std::string data = ca2d::format_pbm(Grid::from_rows({{1, 0, 0, 0, 0, 0, 0, 0, 1}}), ImageFormat::p4);
    EXPECT_EQ(data, std::string("P4\n9 1\n\x80\x80", 9));
}

TEST(Pbm, Errors) {
    // 13 values for a 4x3 image
    EXPECT_EQ(parse_error_offset("P1 4 3 0 0 1 0 1 1 1 0 1 0 1 1 1"), 31u);
    EXPECT_EQ(parse_error_offset("P1 4 3 0 0 1"), 12u);
    EXPECT_EQ(parse_error_offset("P2 4 3"), 1u);
    EXPECT_EQ(parse_error_offset("X1"), 0u);
    EXPECT_EQ(parse_error_offset("P1 0 3"), 4u);
    EXPECT_THROW(ca2d::parse_pbm("P1 4 x"), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_pbm("P1 4 3 0 0 2 0 1 1 1 0 1 0 1 1"), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_pbm("P1 99999999 99999999"), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_pbm(std::string("P4\n9 2\n\x80\x80\x80", 10)), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_pbm(std::string("P4\n8 1\n\x80\x80", 9)), ca2d::ParseError);
}

TEST(Pbm, MessageNamesTheOffset) {
    try {
        ca2d::parse_pbm("P1 4 3 0 0 1");
        FAIL();
    } catch (const ca2d::ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("byte 12"), std::string::npos) << e.what();
    }
}

TEST(Pbm, Files) {
    const auto path = std::filesystem::temp_directory_path() / "ca2d_io_test.pbm";
    const Grid g = ca2d::random_grid(20, 30, 0.4, 5);
    ca2d::write_image(g, path.string(), ImageFormat::p4);
    EXPECT_EQ(ca2d::read_image(path.string()), g);
    std::filesystem::remove(path);
    try {
        ca2d::read_image(path.string());
        FAIL();
    } catch (const ca2d::Error& e) {
        EXPECT_EQ(e.code(), ca2d::Errc::io_error);
    }
}

TEST(MatrixText, RoundTripAndErrors) {
    ca2d::BitMatrix m(3, 5);
    m.set(0, 4, true);
    m.set(2, 0, true);
    const std::string text = ca2d::format_matrix(m);
    EXPECT_EQ(text, "3 5\n00001\n00000\n10000\n");
    EXPECT_EQ(ca2d::parse_matrix(text), m);
    EXPECT_THROW(ca2d::parse_matrix("2 2\n01\n1\n"), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_matrix("2 2\n01\n102\n"), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_matrix("2 2\n01\n10\n11\n"), ca2d::ParseError);
}

TEST(DependencyText, OneBasedLines) {
    const std::string text = "3\n5\n3\n9\n1 2 3\n9\n1 9\n\n6 8\n";
    const auto deps = ca2d::parse_dependency_map(text, 3, 3);
    EXPECT_EQ(deps.at(4), (std::vector<int>{0, 1, 2}));
    EXPECT_TRUE(deps.at(7).empty());
    EXPECT_EQ(ca2d::format_dependency_map(deps), text);
    EXPECT_THROW(ca2d::parse_dependency_map("1\n2\n3\n", 2, 2), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_dependency_map("1\n2\n3\n5\n", 2, 2), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_dependency_map("1 1\n2\n3\n4\n", 2, 2), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_dependency_map("0\n2\n3\n4\n", 2, 2), ca2d::ParseError);
}

TEST(HybridRulesText, Parse) {
    const auto spec = ca2d::parse_hybrid_rules("2 2 2 2\n3 3 3 3\n4 4 4 4\n");
    EXPECT_EQ(spec.rows(), 3);
    EXPECT_EQ(spec.cols(), 4);
    EXPECT_EQ(spec.at(1, 2), ca2d::RuleCode(3));
    EXPECT_THROW(ca2d::parse_hybrid_rules("1 2\n3\n"), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_hybrid_rules("512\n"), ca2d::ParseError);
    EXPECT_THROW(ca2d::parse_hybrid_rules(""), ca2d::ParseError);
}

TEST(RandomGrid, DensityExtremesAndDeterminism) {
    EXPECT_EQ(ca2d::random_grid(9, 70, 0.0, 1).popcount(), 0u);
    EXPECT_EQ(ca2d::random_grid(9, 70, 1.0, 1).popcount(), 630u);
    EXPECT_EQ(ca2d::random_grid(30, 30, 0.5, 3), ca2d::random_grid(30, 30, 0.5, 3));
    EXPECT_NE(ca2d::random_grid(30, 30, 0.5, 3), ca2d::random_grid(30, 30, 0.5, 4));
    EXPECT_THROW(ca2d::random_grid(3, 3, 1.5, 1), ca2d::Error);
}

TEST(RandomGrid, GoldenEightByEight) {
    const Grid golden = ca2d::read_image(std::string(CA2D_TEST_DATA_DIR) + "/random_8x8_seed42.pbm");
    EXPECT_EQ(ca2d::random_grid(8, 8, 0.5, 42), golden);
}

TEST(Render, Ascii) {
    EXPECT_EQ(ca2d::render_ascii(oracle::to_grid(kSampleInput)), "..#.\n###.\n#.##\n");
    const std::string small = ca2d::render_ascii(ca2d::random_grid(10, 100, 0.01, 2), 10);
    EXPECT_EQ(small.find('\n'), 10u);
}

}  // namespace
