#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "vpt/benderwu.hpp"
#include "vpt/errors.hpp"

using namespace vpt;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("vpt-unit-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_all(const fs::path& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("benderwu") {
  TEST_CASE("head coefficients") {
    const BWSeries s = generate(4);
    REQUIRE(s.max_order() == 4);
    CHECK(s[0] == ExactRational(1, 2));
    CHECK(s[1] == ExactRational(3, 4));
    CHECK(s[2] == ExactRational(-21, 8));
    CHECK(s[3] == ExactRational(333, 16));
    CHECK(s[4] == ExactRational(-30885, 128));
    CHECK(verify_head(s));
    CHECK(generate(0) == BWSeries({ExactRational(1, 2)}));
    CHECK_THROWS_AS(generate(-1), DomainError);
  }

  TEST_CASE("recursion intermediates") {
    const BWWorkspace w = run_recursion(3);
    CHECK(w.at(0, 0) == 1);
    CHECK(w.at(1, 0) == 0);
    CHECK(w.at(1, 1) == ExactRational(-3, 8));
    CHECK(w.at(1, 2) == ExactRational(-1, 16));
    CHECK(w.at(2, 1) == ExactRational(21, 16));
    CHECK(w.at(2, 5) == 0);
    CHECK(w.energy[1] == -2 * w.at(1, 1));
    CHECK(w.energy[2] == -2 * w.at(2, 1));
  }

  TEST_CASE("verify_head detects a flipped sign") {
    const BWSeries head = generate(4);
    std::vector<ExactRational> c(head.coefficients().begin(), head.coefficients().end());
    c[2] = ExactRational(21, 8);
    CHECK_FALSE(verify_head(BWSeries(c)));
    CHECK_THROWS_AS(verify_head(BWSeries({ExactRational(1, 2)})), DomainError);
  }

  TEST_CASE("matches the independent implementation through order 60") {
    CHECK(generate(60) == testing::fixture_series().truncated(60));
  }

  TEST_CASE("sign alternation and growth ratio over the fixture") {
    const BWSeries& s = testing::fixture_series();
    REQUIRE(s.max_order() == 251);
    CHECK_NOTHROW(s.validate());
    CHECK(verify_head(s));
    CHECK(s[251] > 0);
    auto ratio = [&](int l) {
      const ExactRational r = abs(s[l + 1] / s[l]) / (l + 1);
      return r.get_d();
    };
    CHECK(ratio(250) > 2.7);
    CHECK(ratio(250) < 3.3);
    CHECK(std::abs(ratio(250) / ratio(200) - 1) < 0.05);
  }

  TEST_CASE("truncation") {
    const BWSeries& s = testing::fixture_series();
    CHECK(s.truncated(4) == generate(4));
    CHECK_THROWS_AS(s.truncated(252), DomainError);
  }

  TEST_CASE("checksum is FNV-1a 64") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  }

  TEST_CASE("cache round trip") {
    const fs::path dir = scratch_dir("roundtrip");
    const fs::path path = dir / "nested" / "bw-4.txt";
    save_cache(generate(4), path);
    CHECK(load_cache(path) == generate(4));
    CHECK(read_all(path) == render_cache(generate(4)));
    CHECK(parse_cache(read_all(testing::data_path("bw-251.txt"))) == testing::fixture_series());
    fs::remove_all(dir);
  }

  TEST_CASE("cache rejects damaged files") {
    const std::string good = render_cache(generate(4));
    SUBCASE("truncated") {
      const std::string bad = replace_line(good, "4 -30885/128\n", "");
      CHECK_THROWS_WITH_AS(parse_cache(bad), doctest::Contains("truncated cache"), DomainError);
    }
    SUBCASE("sign tampering") {
      const std::string bad = replace_line(good, "2 -21/8\n", "2 21/8\n");
      CHECK_THROWS_WITH_AS(parse_cache(bad), doctest::Contains("invariant violation: sign"), DomainError);
    }
    SUBCASE("value tampering keeps signs but breaks the checksum") {
      const std::string bad = replace_line(good, "3 333/16\n", "3 334/16\n");
      CHECK_THROWS_WITH_AS(parse_cache(bad), doctest::Contains("checksum mismatch"), DomainError);
    }
    SUBCASE("header") {
      CHECK_THROWS_AS(parse_cache("hello\n" + good), DomainError);
      CHECK_THROWS_AS(parse_cache(""), DomainError);
    }
    SUBCASE("out of sequence") {
      const std::string bad = replace_line(good, "1 3/4\n", "7 3/4\n");
      CHECK_THROWS_AS(parse_cache(bad), DomainError);
    }
  }

  TEST_CASE("missing cache file is an I/O error") {
    CHECK_THROWS_AS(load_cache("/nonexistent/vpt/bw-4.txt"), IoError);
    CHECK_THROWS_AS(save_cache(generate(2), "/proc/vpt-no-such-dir/bw-2.txt"), IoError);
  }

  TEST_CASE("invariants") {
    CHECK_THROWS_WITH_AS(BWSeries({ExactRational(1, 3)}).validate(), doctest::Contains("e_0"), DomainError);
    CHECK_THROWS_WITH_AS(BWSeries({ExactRational(1, 2), ExactRational(-3, 4)}).validate(),
                         doctest::Contains("invariant violation: sign"), DomainError);
  }
}
