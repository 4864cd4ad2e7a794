#include "harris/io.hpp"

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

using namespace harris;

namespace {

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("harris_io_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) {
        const auto path = dir_ / name;
        std::ofstream out(path);
        out << content;
        return path.string();
    }

    std::filesystem::path dir_;
};

} // namespace

using IoTest = TempDir;

TEST_F(IoTest, LoadsCsvKernel) {
    const std::string path = write("k.csv", "0.5,0.5\n0.25,0.75\n");
    const ChainInput input = load_kernel_csv(path);
    EXPECT_EQ(input.space.size(), 2u);
    EXPECT_DOUBLE_EQ(input.kernel(1, 0), 0.25);
    EXPECT_FALSE(input.v.has_value());
    EXPECT_EQ(input.row_sum_max_dev, 0.0);
}

TEST_F(IoTest, ReportsRowSumDeviation) {
    const std::string path = write("k.csv", "0.5,0.5000000004\n0.25,0.75\n");
    const ChainInput input = load_kernel_csv(path);
    EXPECT_NEAR(input.row_sum_max_dev, 4e-10, 1e-12);
    // Renormalized exactly.
    EXPECT_NEAR(input.kernel(0, 0) + input.kernel(0, 1), 1.0, 1e-15);
}

TEST_F(IoTest, CsvDiagnosticsCarryLineAndColumn) {
    const std::string path = write("bad.csv", "0.5,0.5\n0.25,oops\n");
    try {
        load_kernel_csv(path);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(":2:2"), std::string::npos) << e.what();
    }
}

TEST_F(IoTest, RejectsRaggedAndNonSquare) {
    EXPECT_THROW(load_kernel_csv(write("r.csv", "0.5,0.5\n1.0\n")), ParseError);
    EXPECT_THROW(load_kernel_csv(write("s.csv", "0.5,0.5\n")), ParseError);
    EXPECT_THROW(load_kernel_csv(write("e.csv", "\n")), ParseError);
}

TEST_F(IoTest, LoadsJsonKernelWithWeightAndLabels) {
    const std::string path = write("k.json", R"({
        "n": 2,
        "rows": [[0.0, 1.0], [1.0, 0.0]],
        "v": [1.0, 2.0],
        "labels": ["a", "b"]
    })");
    const ChainInput input = load_kernel_json(path);
    EXPECT_EQ(input.space.size(), 2u);
    ASSERT_TRUE(input.v.has_value());
    EXPECT_DOUBLE_EQ((*input.v)[1], 2.0);
    EXPECT_EQ(input.space.labels()[1], "b");
}

TEST_F(IoTest, JsonShapeErrors) {
    EXPECT_THROW(load_kernel_json(write("a.json", R"({"n": 3, "rows": [[1.0]]})")), ParseError);
    EXPECT_THROW(load_kernel_json(write("b.json", "[1,2]")), ParseError);
    EXPECT_THROW(load_kernel_json(write("c.json", "{not json")), ParseError);
    EXPECT_THROW(load_kernel_json(write("d.json",
                                        R"({"n": 1, "rows": [[1.0]], "v": [1.0, 2.0]})")),
                 ParseError);
}

TEST_F(IoTest, NonFiniteWeightRejected) {
    // Ingestion refuses V entries that are not finite numbers.
    EXPECT_THROW(load_weight(write("v.csv", "1.0\ninf\n"), 2), ParseError);
    EXPECT_THROW(load_weight(write("w.csv", "1.0\nnan\n"), 2), ParseError);
}

TEST_F(IoTest, LoadChainDispatch) {
    EXPECT_EQ(load_chain("demo:flip").space.size(), 2u);
    EXPECT_TRUE(load_chain("demo:ar1").v.has_value());
    const std::string csv = write("k.csv", "1.0\n");
    EXPECT_EQ(load_chain(csv).space.size(), 1u);
    EXPECT_THROW(load_chain("demo:unknown"), ParamError);
    EXPECT_THROW(load_chain(dir_ / "missing.csv"), ParseError);
}

TEST_F(IoTest, LoadWeightFileAndInline) {
    const std::string path = write("v.csv", "0.0\n1.0\n2.0\n");
    EXPECT_DOUBLE_EQ(load_weight(path, 3)[2], 2.0);
    EXPECT_DOUBLE_EQ(load_weight("0,1,4", 3)[2], 4.0);
    EXPECT_THROW(load_weight("0,1", 3), ParseError);
    EXPECT_THROW(load_weight("missing_v.csv", 3), ParseError);
}

TEST_F(IoTest, LoadStartMeasure) {
    EXPECT_DOUBLE_EQ(load_start_measure("uniform", 4)[0], 0.25);
    EXPECT_DOUBLE_EQ(load_start_measure("delta:2", 4)[2], 1.0);
    EXPECT_THROW(load_start_measure("delta:9", 4), ParseError);
    EXPECT_THROW(load_start_measure("delta:x", 4), ParseError);
    const std::string path = write("mu.csv", "0.25,0.25,0.25,0.25\n");
    EXPECT_DOUBLE_EQ(load_start_measure(path, 4)[3], 0.25);
}
