#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "autorecon/error.hpp"
#include "autorecon/families.hpp"
#include "autorecon/io.hpp"
#include "autorecon/recon.hpp"

using namespace autorecon;

namespace {

RatFn random_grid(const GroupSpec& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  RatFn f(g);
  for (auto& v : f.values()) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return f;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal_inconsistency;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("autorecon_io_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(GridJson, RoundTrip) {
  std::mt19937_64 rng(7);
  for (const auto& dims : std::vector<std::vector<std::int64_t>>{{5}, {6}, {2, 4}, {3, 3, 2}}) {
    const auto f = random_grid(GroupSpec(dims), rng);
    const auto text = grid_to_json(f);
    EXPECT_EQ(grid_from_json(text).values(), f.values());
    EXPECT_EQ(grid_to_json(grid_from_json(text)), text);
  }
}

TEST(GridJson, KnownLayout) {
  RatFn f(GroupSpec({3}), {Rational(1, 2), Rational(0), Rational(-3)});
  EXPECT_EQ(grid_to_json(f), "{\n  \"dims\": [\n    3\n  ],\n  \"values\": [\n    \"1/2\",\n    \"0\",\n    \"-3\"\n  ]\n}\n");
  EXPECT_EQ(grid_from_json(R"({"dims":[3],"values":[1,"2/4",-1]})").values(),
            (std::vector<Rational>{Rational(1), Rational(1, 2), Rational(-1)}));
}

TEST(GridJson, RejectsMalformedInput) {
  for (const char* bad : {"", "{", "[]", R"({"values":["1"]})", R"({"dims":[2],"values":["1"]})",
                          R"({"dims":[0],"values":[]})", R"({"dims":[2],"values":["1","x"]})",
                          R"({"dims":[2],"values":["1","1/0"]})", R"({"dims":[2],"values":[1,0.5]})"})
    EXPECT_EQ(kind_of([&] { grid_from_json(bad); }), ErrorKind::parse_error) << bad;
}

TEST(GridCsv, RoundTripAndLayout) {
  std::mt19937_64 rng(11);
  const auto f = random_grid(GroupSpec({2, 3}), rng);
  EXPECT_EQ(grid_from_csv(grid_to_csv(f)).values(), f.values());
  RatFn g(GroupSpec({2, 2}), {Rational(1), Rational(2), Rational(3), Rational(-1, 3)});
  EXPECT_EQ(grid_to_csv(g), "2,2\n1,2\n3,-1/3\n");
  EXPECT_EQ(grid_from_csv("2,2\r\n 1 , 2\r\n\r\n3,-1/3\r\n").values(), g.values());
}

TEST(GridCsv, RejectsMalformedInput) {
  for (const char* bad : {"", "2,x\n1,2\n", "3\n1,2\n", "2\n1,,\n", "2\n1,q\n"})
    EXPECT_EQ(kind_of([&] { grid_from_csv(bad); }), ErrorKind::parse_error) << bad;
}

TEST(MomentFile, RoundTripIsCanonical) {
  const auto f = worked_example_z7();
  const auto table = MomentTable::from_function(f, 3);
  const auto text = moments_to_json(table);
  const auto back = moments_from_json(text);
  EXPECT_EQ(back.max_order(), 3u);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(back.entries(n), table.entries(n));
  EXPECT_EQ(moments_to_json(back), text);
  EXPECT_TRUE(is_moment_document(text));
  EXPECT_FALSE(is_moment_document(grid_to_json(f)));
}

TEST(MomentFile, EntriesSortedByOrderThenShifts) {
  const auto table = MomentTable::from_function(worked_example_z7(), 3);
  const auto text = moments_to_json(table);
  const auto doc_order1 = text.find("\"shifts\": []");
  ASSERT_NE(doc_order1, std::string::npos);
  // first entry is the order-one moment
  EXPECT_LT(doc_order1, text.find("\"shifts\": [\n"));
}

TEST(MomentFile, RejectsMalformedInput) {
  for (const char* bad : {R"({"dims":[5],"entries":[]})", R"({"dims":[5],"max_order":0,"entries":[]})",
                          R"({"dims":[5],"max_order":2,"entries":[{"shifts":[[1],[2]],"value":"1"}]})",
                          R"({"dims":[5],"max_order":2,"entries":[{"shifts":[[1,1]],"value":"1"}]})",
                          R"({"dims":[5],"max_order":2,"entries":[{"value":"1"}]})"})
    EXPECT_EQ(kind_of([&] { moments_from_json(bad); }), ErrorKind::parse_error) << bad;
}

TEST(MomentFile, ReconstructsFromAFileTable) {
  std::mt19937_64 rng(3);
  const GroupSpec g({15});
  const auto f = random_grid(g, rng);
  const auto k = required_order_for(f);
  const auto table = moments_from_json(moments_to_json(MomentTable::from_function(f, k)));
  auto oracle = MomentOracle::from_table(table, k);
  const auto rec = reconstruct(oracle, ReconConfig{});
  EXPECT_TRUE(verify_translation(f, rec).has_value());
}

TEST(Spectrum, ListsNonzeroPoints) {
  const auto [f, g] = family_delta(GroupSpec({5}));
  const auto text = spectrum_to_json(f);
  EXPECT_NE(text.find("\"conductor\": 5"), std::string::npos);
  EXPECT_NE(text.find("\"point\""), std::string::npos);
}

TEST(Files, AtomicWriteReplacesContent) {
  const auto dir = scratch_dir();
  const auto path = dir / "f.json";
  const RatFn f(GroupSpec({2}), {Rational(1), Rational(-1)});
  write_grid(path, f);
  write_grid(path, f, GridFormat::csv);
  EXPECT_EQ(read_text_file(path), "2\n1,-1\n");
  EXPECT_EQ(read_grid(path, GridFormat::csv).values(), f.values());
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  EXPECT_EQ(kind_of([&] { read_text_file(dir / "missing.json"); }), ErrorKind::parse_error);
  std::filesystem::remove_all(dir);
}
