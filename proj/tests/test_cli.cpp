#include <sys/file.h>
#include <fcntl.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <stdexcept>

#include "doctest.h"
#include "gapsets/cli/app.hpp"
#include "gapsets/cli/bfile.hpp"
#include "gapsets/cli/count_cache.hpp"
#include "gapsets/cli/tables.hpp"
#include "json.hpp"

using namespace gapsets;
using namespace gapsets::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gapsets");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixture = std::string(GAPSETS_DATA_DIR) + "/A007323.b";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gapsets-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("count") {
  CHECK(run_cli({"count", "--genus", "10"}).out == "204\n");
  CHECK(run_cli({"count", "--genus", "10", "--max-depth", "3"}).out == "168\n");
  CHECK(run_cli({"count", "--genus", "12", "--depth", "6", "--mult", "4"}).out == "9\n");
  const auto j = nlohmann::json::parse(run_cli({"--format", "json", "count", "--genus", "10"}).out);
  CHECK(j["count"] == 204);
  CHECK(j["query"]["depth"] == "any");
  const auto csv = run_cli({"--format", "csv", "count", "--genus", "10", "--max-depth", "3"});
  CHECK(contains(csv.out, "10,<=3,any,168"));
  CHECK(run_cli({"--jobs", "3", "count", "--genus", "14"}).out == "1693\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"count", "--genus", "10", "--depth", "3", "--max-depth", "3"}).code == kUsageError);
  CHECK(run_cli({"count"}).code == kUsageError);
  CHECK(run_cli({"count", "--genus", "5", "--mult", "1"}).code == kUsageError);
  CHECK(run_cli({"count", "--genus", "40"}).code == kUsageError);
  CHECK(run_cli({"frobnicate"}).code == kUsageError);
  CHECK(run_cli({"--format", "yaml", "count", "--genus", "3"}).code == kUsageError);
  CHECK(run_cli({"verify", "--set", "3,1"}).code == kUsageError);
  CHECK(run_cli({"table", "--which", "t9"}).code == kUsageError);
  CHECK(run_cli({"table", "--which", "t4", "--gmax", "30"}).code == kUsageError);
  CHECK(run_cli({"from-kunz"}).code == kUsageError);
  CHECK(run_cli({"seq", "--kind", "fibonacci-k", "--n", "4"}).code == kUsageError);
}

TEST_CASE("verify") {
  const auto r1 = run_cli({"verify", "--set", "1,2,4,7,10", "--mult", "3"});
  CHECK(r1.code == kNegativeVerdict);
  CHECK(contains(r1.out, "gapset: no (witness 10 = 5 + 5)"));
  CHECK(contains(r1.out, "3-extension: yes"));
  CHECK(contains(r1.out, "pseudo-Kunz coordinates: (4,1)"));
  CHECK(contains(r1.out, "pseudo-Apery set: {0,13,5}"));

  const auto r2 = run_cli({"verify", "--set", "1,2,3,5,6,7,9,10,11,13,14"});
  CHECK(r2.code == kSuccess);
  CHECK(contains(r2.out, "gapset: yes"));
  CHECK(contains(r2.out, "genus: 11"));
  CHECK(contains(r2.out, "conductor: 15"));
  CHECK(contains(r2.out, "depth: 4"));
  CHECK(contains(r2.out, "Kunz system: satisfied"));

  const auto r3 = run_cli({"verify", "--set", "2,3"});
  CHECK(r3.code == kNegativeVerdict);
  CHECK(contains(r3.out, "2 = 1 + 1"));

  const auto j = nlohmann::json::parse(run_cli({"--format", "json", "verify", "--set", "1,2,4,7,10", "--mult", "3"}).out);
  CHECK(j["gapset"] == false);
}

TEST_CASE("kunz and from-kunz") {
  const auto k = run_cli({"kunz", "--set", "1,2,3,5,6,7,9,10,11,13,14"});
  CHECK(k.code == kSuccess);
  CHECK(contains(k.out, "Kunz vector: 4:4,4,3"));
  CHECK(contains(k.out, "{0,17,18,15}"));
  const auto f = run_cli({"from-kunz", "--vector", "5:1,3,3,2"});
  CHECK(contains(f.out, "{1,2,3,4,7,8,9,12,13}"));
  const auto c = run_cli({"from-kunz", "--composition", "(4,1)"});
  CHECK(contains(c.out, "3-extension: {1,2,4,7,10}"));
}

TEST_CASE("enumerate") {
  const auto r = run_cli({"enumerate", "--genus", "3"});
  CHECK(r.code == kSuccess);
  CHECK(r.out == "{1,2,3}\n{1,2,5}\n{1,2,4}\n{1,3,5}\n");
  const auto k = run_cli({"enumerate", "--genus", "3", "--kunz"});
  CHECK(k.out == "4:1,1,1\n3:1,2\n3:2,1\n2:3\n");
}

TEST_CASE("tables") {
  const auto t4 = run_cli({"table", "--which", "t4", "--gmax", "18"});
  REQUIRE(t4.code == kSuccess);
  CHECK(contains(t4.out, "11116"));
  CHECK(contains(t4.out, "13467"));
  const auto t2 = run_cli({"--format", "csv", "table", "--which", "t2", "--gmax", "12"});
  REQUIRE(t2.code == kSuccess);
  CHECK(contains(t2.out, "1,3,4,6,7,9,11,13,15,18"));
  const auto t3 = run_cli({"--format", "csv", "table", "--which", "t3", "--gmax", "10"});
  CHECK(contains(t3.out, "10,204,413,468,505,512"));
  const auto t1 = run_cli({"--format", "csv", "table", "--which", "t1", "--gmax", "10"});
  CHECK(contains(t1.out, "10,110,135,156,168,204"));
  const auto md = run_cli({"--format", "markdown", "table", "--which", "t4", "--gmax", "10"});
  CHECK(contains(md.out, "**"));
}

TEST_CASE("table CSV output is byte-identical across runs") {
  for (const char* which : {"t1", "t2", "t3", "t4"}) {
    const auto a = run_cli({"--format", "csv", "table", "--which", which, "--gmax", "10"});
    const auto b = run_cli({"--format", "csv", "--jobs", "2", "table", "--which", which, "--gmax", "10"});
    CHECK(a.code == kSuccess);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("table objects") {
  const Table t = multiplicity4_table(12);
  REQUIRE_FALSE(t.rows.empty());
  const auto& footer = t.rows.back();
  REQUIRE(footer.size() == 11);
  CHECK(footer[10].text == "18");
  const Table d = depth_table(8);
  CHECK(d.rows.size() == 9);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("bounds") {
  const auto b10 = run_cli({"bounds", "--genus", "10"});
  CHECK(b10.code == kSuccess);
  CHECK(contains(b10.out, "135 <= 168 <= 204"));
  CHECK(contains(b10.out, "512"));
  CHECK(contains(b10.out, "413"));
  const auto b5 = run_cli({"bounds", "--genus", "5"});
  CHECK(contains(b5.out, "F_{g+2}-P_{g+1} = 11"));
  CHECK(contains(b5.out, "n'_g = 11"));
  const auto b2 = run_cli({"bounds", "--genus", "2"});
  CHECK(contains(b2.out, "n_g = 2"));
  CHECK(contains(b2.out, "2^{g-1} = 2"));
  for (int g = 1; g <= 14; ++g) CHECK(run_cli({"bounds", "--genus", std::to_string(g)}).code == kSuccess);
  CHECK(run_cli({"bounds", "--genus", "12", "--M", "6"}).code == kSuccess);
  CHECK(run_cli({"bounds", "--genus", "0"}).code == kUsageError);
}

TEST_CASE("formula") {
  CHECK(contains(run_cli({"formula", "--which", "gq", "--genus", "16", "--depth", "8"}).out, "12"));
  CHECK(contains(run_cli({"formula", "--which", "gq4", "--genus", "8", "--depth", "4"}).out, "6  [q = g/2]"));
  CHECK(contains(run_cli({"formula", "--which", "upper-closed", "--genus", "10"}).out, "419"));
  CHECK(contains(run_cli({"formula", "--which", "upper", "--genus", "10", "--M", "4"}).out, "413"));
  CHECK(contains(run_cli({"formula", "--which", "window", "--genus", "12", "--mult", "4"}).out, "[4,6]"));
  CHECK(run_cli({"formula", "--which", "nope", "--genus", "3"}).code == kUsageError);
}

TEST_CASE("seq") {
  CHECK(run_cli({"seq", "--kind", "fibonacci", "--n", "10"}).out == "10 55\n");
  CHECK(run_cli({"seq", "--kind", "fibonacci-k", "--k", "4", "--n", "11"}).out == "11 401\n");
  CHECK(run_cli({"seq", "--kind", "padovan", "--n", "-3", "--to", "0"}).out == "-3 1\n-2 0\n-1 0\n0 1\n");
  CHECK(run_cli({"seq", "--kind", "convolution", "--n", "10"}).out == "10 135\n");
  CHECK(run_cli({"seq", "--kind", "padovan", "--n", "-4"}).code == kUsageError);
}

TEST_CASE("oeis") {
  const auto ok = run_cli({"oeis", "--bfile", kFixture});
  CHECK(ok.code == kSuccess);
  CHECK(contains(ok.out, "19 of 19 terms match"));
  CHECK(run_cli({"oeis", "--bfile", kFixture, "--gmax", "9"}).code == kSuccess);

  TempDir dir;
  SUBCASE("empty file") {
    const auto p = (dir.path / "empty.b").string();
    std::ofstream(p) << "# nothing here\n";
    const auto r = run_cli({"oeis", "--bfile", p});
    CHECK(r.code == kUsageError);
    CHECK(contains(r.err, "no entries"));
  }
  SUBCASE("corrupted value at g = 6") {
    const auto p = (dir.path / "bad.b").string();
    std::ifstream in(kFixture);
    std::ofstream outf(p);
    std::string line;
    while (std::getline(in, line)) outf << (line == "6 23" ? "6 24" : line) << '\n';
    outf.close();
    const auto r = run_cli({"oeis", "--bfile", p, "--gmax", "9"});
    CHECK(r.code == kNegativeVerdict);
    CHECK(contains(r.out, "g=6: file has 24, expected 23"));
  }
  SUBCASE("missing terms") {
    const auto p = (dir.path / "short.b").string();
    std::ofstream(p) << "0 1\n1 1\n2 2\n";
    const auto r = run_cli({"oeis", "--bfile", p, "--gmax", "4"});
    CHECK(r.code == kNegativeVerdict);
    CHECK(contains(r.out, "g=3: missing"));
  }
  SUBCASE("offset") {
    const auto p = (dir.path / "shifted.b").string();
    std::ofstream(p) << "1 1\n2 1\n3 2\n4 4\n5 7\n";
    CHECK(run_cli({"oeis", "--bfile", p, "--gmax", "4", "--offset", "1"}).code == kSuccess);
    const auto r = run_cli({"oeis", "--bfile", p, "--gmax", "4"});
    CHECK(r.code == kNegativeVerdict);
    CHECK(contains(r.err, "check --offset"));
  }
  SUBCASE("missing file") { CHECK(run_cli({"oeis", "--bfile", (dir.path / "nope.b").string()}).code == kUsageError); }
}

TEST_CASE("b-file parser") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
  };
  const auto e = parse("# A007323\n\n0 1\n1 1\n2   2\n18 13467\n");
  REQUIRE(e.size() == 4);
  CHECK(e[3] == BFileEntry{18, BigCount(13467)});
  CHECK_THROWS_WITH_AS(parse(""), "b-file: no entries", BFileError);
  CHECK_THROWS_WITH_AS(parse("0 1\n0 1\n"), doctest::Contains("line 2"), BFileError);
  CHECK_THROWS_WITH_AS(parse("0 1\n1 x\n"), doctest::Contains("line 2"), BFileError);
  CHECK_THROWS_WITH_AS(parse("0 -1\n"), doctest::Contains("line 1"), BFileError);
  CHECK_THROWS_WITH_AS(parse("0\n"), doctest::Contains("line 1"), BFileError);
  CHECK_THROWS_WITH_AS(parse("0 1 2\n"), doctest::Contains("line 1"), BFileError);
  const auto entries = read_bfile(kFixture);
  CHECK(entries.size() == 19);
}

TEST_CASE("count cache") {
  TempDir dir;
  const std::string path = (dir.path / "cache.json").string();

  SUBCASE("round trip through the CLI") {
    CHECK(run_cli({"--cache", path, "count", "--genus", "10"}).out == "204\n");
    REQUIRE(fs::exists(path));
    const auto doc = nlohmann::json::parse(std::ifstream(path));
    CHECK(doc["schema_version"] == 1);
    REQUIRE(doc["entries"].size() == 1);
    CHECK(doc["entries"][0]["count"] == 204);
    CHECK(doc["entries"][0]["mult"].is_null());
    CHECK(run_cli({"--cache", path, "count", "--genus", "10"}).out == "204\n");
    const auto cache = CountCache::load(path);
    CHECK(cache.lookup({10, DepthFilter::any(), std::nullopt}) == 204u);
    CHECK_FALSE(cache.lookup({10, DepthFilter::at_most(3), std::nullopt}).has_value());
  }

  SUBCASE("self-check over 100 cached queries") {
    CountCache cache;
    std::size_t stored = 0;
    for (std::uint32_t g = 0; g <= 12 && stored < 100; ++g)
      for (std::uint32_t q = 0; q <= g && stored < 100; ++q)
        for (std::optional<std::uint32_t> m : {std::optional<std::uint32_t>{}, std::optional<std::uint32_t>{3}}) {
          const CensusQuery query{g, q % 2 ? DepthFilter::exact(q) : DepthFilter::at_most(q), m};
          cache.store(query, count_gapsets(query).count, 0);
          ++stored;
        }
    cache.save(path);
    const auto reloaded = CountCache::load(path);
    CHECK(reloaded.size() == cache.size());
    const auto report = reloaded.self_check(100, 12, 7, [](const CensusQuery& q) { return count_gapsets(q).count; });
    CHECK(report.checked == 100);
    CHECK(report.mismatches.empty());
    const auto cli = run_cli({"--cache", path, "count", "--genus", "5", "--self-check", "100"});
    CHECK(cli.code == kSuccess);
    CHECK(contains(cli.err, "0 mismatches"));
  }

  SUBCASE("a wrong cached value is caught") {
    CountCache cache;
    cache.store({9, DepthFilter::any(), std::nullopt}, 117, 0);
    cache.save(path);
    const auto cli = run_cli({"--cache", path, "count", "--genus", "4", "--self-check", "10"});
    CHECK(cli.code == kInvariantViolation);
    CHECK(contains(cli.err, "recomputed 118"));
  }

  SUBCASE("unknown schema version is ignored") {
    std::ofstream(path) << R"({"schema_version":99,"entries":[{"g":10,"depth":"any","mult":null,"count":1}]})";
    CHECK(CountCache::load(path).size() == 0);
    CHECK(run_cli({"--cache", path, "count", "--genus", "10"}).out == "204\n");
  }

  SUBCASE("malformed cache is an error") {
    std::ofstream(path) << "{not json";
    CHECK(run_cli({"--cache", path, "count", "--genus", "3"}).code == kUsageError);
  }

  SUBCASE("concurrent writers fail fast") {
    const std::string lock_path = path + ".lock";
    const int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
    REQUIRE(fd >= 0);
    REQUIRE(::flock(fd, LOCK_EX | LOCK_NB) == 0);
    CountCache cache;
    cache.store({3, DepthFilter::any(), std::nullopt}, 4, 0);
    CHECK_THROWS_AS(cache.save(path), CacheLockedError);
    CHECK(run_cli({"--cache", path, "count", "--genus", "3"}).code == kUsageError);
    ::flock(fd, LOCK_UN);
    ::close(fd);
    CHECK_NOTHROW(cache.save(path));
  }
}
