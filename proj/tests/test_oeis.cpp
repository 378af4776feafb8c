#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "lrfill/oeis/bfile.hpp"
#include "lrfill/oeis/fetch.hpp"
#include "lrfill/oeis/registry.hpp"
#include "reference.hpp"

using namespace lrfill::oeis;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = LRFILL_FIXTURE_DIR;

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kFixtures))
    if (e.path().extension() == ".txt") out.push_back(e.path());
  std::ranges::sort(out);
  return out;
}

/// Fresh directory under the system temp dir, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("lrfill-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

/// Transport serving b-file text for known URLs and counting calls.
struct FakeTransport {
  std::shared_ptr<std::atomic<int>> calls = std::make_shared<std::atomic<int>>(0);
  std::shared_ptr<std::atomic<int>> fail_first = std::make_shared<std::atomic<int>>(0);

  Transport make() const {
    auto c = calls;
    auto f = fail_first;
    return [c, f](const std::string& url) -> std::string {
      ++*c;
      if (f->load() > 0) {
        --*f;
        throw FetchError("simulated outage");
      }
      if (url == bfile_url("A026222")) return "# A026222\n1 1\n2 3\n3 9\n4 15\n5 24\n";
      if (url == bfile_url("A026136")) return "1 1\n2 3\n3 2\n4 7\n";
      throw FetchError("404 for " + url);
    };
  }
};

std::vector<std::int64_t> values(const BFile& b) {
  std::vector<std::int64_t> out;
  for (const auto& e : b.entries) out.push_back(e.second);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- parsing

TEST(BFileParse, Examples) {
  const auto b = parse_bfile("1 1\n2 3\n3 2\n");
  EXPECT_EQ(b.entries, (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(b.source, "inline");
  const auto c = parse_bfile("# comment\n1 1\n");
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.entries[0], (std::pair<std::int64_t, std::int64_t>{1, 1}));
}

TEST(BFileParse, WhitespaceAndBlankLines) {
  const auto b = parse_bfile("\n   \n  1\t 10  \r\n\n#x\n2    -4\n+3 +5");
  EXPECT_EQ(b.entries, (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 10}, {2, -4}, {3, 5}}));
  EXPECT_TRUE(parse_bfile("").empty());
}

TEST(BFileParse, NegativeIndicesAndLargeValues) {
  const auto b = parse_bfile("-2 -9223372036854775808\n0 9223372036854775807\n");
  EXPECT_EQ(b.first_index(), -2);
  EXPECT_EQ(b.last_index(), 0);
  EXPECT_EQ(b.at(-2), std::numeric_limits<std::int64_t>::min());
  EXPECT_FALSE(b.at(-1).has_value());
  EXPECT_FALSE(b.at(5).has_value());
}

TEST(BFileParse, Errors) {
  auto error_of = [](const std::string& text) -> std::string {
    try {
      parse_bfile(text);
    } catch (const BFileError& e) {
      return std::to_string(e.line()) + "|" + e.what();
    }
    return "no error";
  };
  EXPECT_EQ(error_of("1 1\n1 2\n"), "2|line 2: duplicate index 1");
  EXPECT_EQ(error_of("2 1\n1 2\n"), "2|line 2: index 1 is not increasing");
  EXPECT_EQ(error_of("# h\n\n12\n"), "3|line 3: expected 'index value', got '12'");
  EXPECT_EQ(error_of("1 2 3\n"), "1|line 1: expected two fields, got '1 2 3'");
  EXPECT_EQ(error_of("x 2\n"), "1|line 1: bad index 'x'");
  EXPECT_EQ(error_of("1 2y\n"), "1|line 1: bad value '2y'");
  EXPECT_EQ(error_of("1 99999999999999999999\n"), "1|line 1: bad value '99999999999999999999'");
}

TEST(BFileParse, Identifiers) {
  EXPECT_TRUE(valid_id("A026136"));
  EXPECT_FALSE(valid_id("A26136"));
  EXPECT_FALSE(valid_id("B026136"));
  EXPECT_EQ(normalize_id("a026136"), "A026136");
  EXPECT_EQ(normalize_id("26136"), "A026136");
  EXPECT_EQ(normalize_id("A65190"), "A065190");
  EXPECT_THROW(normalize_id("A02613x"), std::invalid_argument);
  EXPECT_EQ(bfile_url("A026222"), "https://oeis.org/A026222/b026222.txt");
}

TEST(BFileRoundTrip, SerializeParse) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    BFile b{"A000" + std::to_string(100 + trial), {}, "inline"};
    std::int64_t idx = static_cast<std::int64_t>(rng() % 100) - 50;
    for (int k = static_cast<int>(rng() % 50); k > 0; --k) {
      b.entries.emplace_back(idx, static_cast<std::int64_t>(rng()));
      idx += 1 + static_cast<std::int64_t>(rng() % 3);
    }
    EXPECT_EQ(parse_bfile(serialize(b), b.id), b);
  }
}

TEST(BFileRoundTrip, AllFixtures) {
  const auto files = fixture_files();
  ASSERT_EQ(files.size(), 28u);
  for (const auto& f : files) {
    const auto b = load_bfile(f);
    EXPECT_EQ(b.id, f.stem().string());
    EXPECT_EQ(b.entries.size(), 300u) << f;
    EXPECT_EQ(b.first_index(), 1) << f;
    EXPECT_EQ(parse_bfile(serialize(b), b.id), b) << f;
  }
}

// ---------------------------------------------------------------- compare

TEST(Compare, StandardPrefixAgainstFixture) {
  const auto fixture = load_bfile(kFixtures / "A026136.txt");
  const auto d = compare(gen::permutation(lrfill::RulePreset::Rule36, 27), 1, fixture, 27);
  EXPECT_EQ(d.status, DiffStatus::Identical);
  EXPECT_EQ(d.compared, 27u);
  EXPECT_EQ(d.from, 1);
  EXPECT_EQ(d.to, 27);
}

TEST(Compare, OddPrefixAgainstFixture) {
  const auto fixture = load_bfile(kFixtures / "A026177.txt");
  const std::vector<std::int64_t> displayed{1, 4, 2, 3, 10, 12, 5, 16, 6, 7, 22, 8, 9, 28,
                                            30, 11, 34, 36, 13, 40, 14, 15, 46, 48, 17, 52, 18, 19};
  EXPECT_EQ(compare(displayed, 1, fixture, 28).status, DiffStatus::Identical);
}

TEST(Compare, FirstMismatch) {
  const auto b = parse_bfile("1 1\n2 2\n3 4\n", "A999999");
  const auto d = compare({1, 2, 3}, 1, b, 3);
  EXPECT_EQ(d.status, DiffStatus::FirstMismatch);
  ASSERT_TRUE(d.index.has_value());
  EXPECT_EQ(*d.index, 3);
  EXPECT_EQ(d.lhs, 3);
  EXPECT_EQ(d.rhs, 4);
  EXPECT_FALSE(d.agrees());
  EXPECT_EQ(format_diff(d), "generated vs A999999: first-mismatch over 1..3 (3 terms), first mismatch at 3: 3 vs 4");
}

TEST(Compare, RangeLimitedAndEmptyOverlap) {
  const auto b = parse_bfile("5 1\n6 2\n7 3\n");
  const auto d = compare({9, 9, 9, 9, 1, 2}, 1, b, 10);
  EXPECT_EQ(d.status, DiffStatus::RangeLimited);
  EXPECT_TRUE(d.agrees());
  EXPECT_EQ(d.compared, 2u);
  EXPECT_EQ(d.from, 5);
  EXPECT_EQ(d.to, 6);
  EXPECT_THROW(compare({1, 2}, 100, b, 0), std::invalid_argument);
  EXPECT_EQ(compare_bfiles(b, b).status, DiffStatus::Identical);
}

TEST(Compare, IdenticalIffOverlapAgrees) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> a(1 + rng() % 30);
    for (auto& x : a) x = rng() % 4;
    auto b = a;
    const bool flip = rng() % 2;
    if (flip) b[rng() % b.size()] += 1;
    const auto d = compare(a, 1, from_sequence(b, 1, "x"), 0);
    EXPECT_EQ(d.status == DiffStatus::Identical, !flip);
  }
}

// ---------------------------------------------------------------- registry vs fixtures

TEST(Registry, EveryFixtureHasAGenerator) {
  for (const auto& f : fixture_files()) EXPECT_NE(find_source(f.stem().string()), nullptr) << f;
  EXPECT_EQ(find_source("A000045"), nullptr);
  EXPECT_NE(find_source("a26136"), nullptr);
}

TEST(Registry, GeneratorsMatchFixtures) {
  for (const auto& f : fixture_files()) {
    const auto b = load_bfile(f);
    const auto* src = find_source(b.id);
    ASSERT_NE(src, nullptr);
    const auto d = compare(src->generate(b.entries.size()), src->offset, b, 0);
    EXPECT_EQ(d.status, DiffStatus::Identical) << format_diff(d);
    EXPECT_EQ(d.compared, b.entries.size()) << b.id;
  }
}

TEST(Registry, EvenRuleIdentitiesOverFixtures) {
  ASSERT_EQ(even_rule_identities().size(), 9u);
  for (const auto& [lhs, rhs] : even_rule_identities()) {
    const auto d = compare_bfiles(load_bfile(kFixtures / (lhs + ".txt")), load_bfile(kFixtures / (rhs + ".txt")));
    EXPECT_EQ(d.status, DiffStatus::Identical) << format_diff(d);
    EXPECT_EQ(d.compared, 300u);
  }
}

TEST(Registry, GeneratorsAgainstReference) {
  // direct oracle for the two permutations
  const auto s = ref::standard(300);
  const auto g = gen::permutation(lrfill::RulePreset::Rule36, 300);
  for (std::size_t i = 0; i < 300; ++i) ASSERT_EQ(static_cast<std::uint64_t>(g[i]), s[i]);
  const auto c = find_source("A026222")->generate(13);
  EXPECT_EQ(c, (Terms{1, 3, 9, 15, 24, 27, 33, 42, 45, 51, 60, 69, 72}));
  EXPECT_EQ(find_source("A026140")->generate(8), (Terms{0, 1, 3, 4, 7, 9, 10, 12}));
}

// ---------------------------------------------------------------- cache and fetch

TEST(Cache, WarmHitNeedsNoNetwork) {
  TempDir tmp;
  fs::copy_file(kFixtures / "A026136.txt", tmp.path / "A026136.txt");
  FakeTransport fake;
  BFileCache cache(tmp.path, fake.make());
  const auto a = cache.fetch_raw("A026136");
  const auto b = cache.fetch_raw("A026136");
  EXPECT_EQ(a, b);
  EXPECT_EQ(*fake.calls, 0);
  EXPECT_EQ(cache.network_requests(), 0u);
  const auto parsed = cache.fetch("A026136");
  EXPECT_EQ(parsed.source, (tmp.path / "A026136.txt").string());
  EXPECT_EQ(parsed.entries.size(), 300u);
}

TEST(Cache, ColdOfflineFails) {
  TempDir tmp;
  FakeTransport fake;
  BFileCache cache(tmp.path, fake.make(), FetchOptions{.offline = true});
  try {
    cache.fetch("A026136");
    FAIL() << "expected FetchError";
  } catch (const FetchError& e) {
    EXPECT_NE(std::string(e.what()).find("unavailable offline"), std::string::npos);
  }
  EXPECT_EQ(*fake.calls, 0);
  BFileCache no_transport(tmp.path);
  EXPECT_THROW(no_transport.fetch("A026136"), FetchError);
}

TEST(Cache, ColdOnlineFetchesOnceAndStores) {
  TempDir tmp;
  FakeTransport fake;
  BFileCache cache(tmp.path / "nested", fake.make());
  const auto b = cache.fetch("A026222");
  EXPECT_EQ(values(b), (std::vector<std::int64_t>{1, 3, 9, 15, 24}));
  EXPECT_EQ(b.source, bfile_url("A026222"));
  EXPECT_TRUE(cache.cached("A026222"));
  EXPECT_FALSE(fs::exists(tmp.path / "nested" / "A026222.txt.tmp"));
  const auto again = cache.fetch("A026222");
  EXPECT_EQ(again, b);
  EXPECT_EQ(*fake.calls, 1);
}

TEST(Cache, NoRetriesByDefault) {
  TempDir tmp;
  FakeTransport fake;
  *fake.fail_first = 1;
  BFileCache cache(tmp.path, fake.make());
  EXPECT_THROW(cache.fetch("A026222"), FetchError);
  EXPECT_EQ(*fake.calls, 1);
  EXPECT_FALSE(cache.cached("A026222"));
}

TEST(Cache, BoundedRetries) {
  TempDir tmp;
  FakeTransport fake;
  *fake.fail_first = 2;
  BFileCache cache(tmp.path, fake.make(), FetchOptions{.retries = 2, .backoff = std::chrono::milliseconds(1)});
  EXPECT_EQ(values(cache.fetch("A026222")).size(), 5u);
  EXPECT_EQ(*fake.calls, 3);

  FakeTransport worse;
  *worse.fail_first = 5;
  BFileCache other(tmp.path / "b", worse.make(), FetchOptions{.retries = 2, .backoff = std::chrono::milliseconds(1)});
  EXPECT_THROW(other.fetch("A026222"), FetchError);
  EXPECT_EQ(*worse.calls, 3);
}

TEST(Cache, NotFoundIsAnError) {
  TempDir tmp;
  FakeTransport fake;
  BFileCache cache(tmp.path, fake.make());
  EXPECT_THROW(cache.fetch("A000045"), FetchError);
}

TEST(Cache, ConcurrentFetchesShareOneRequest) {
  TempDir tmp;
  FakeTransport fake;
  BFileCache cache(tmp.path, fake.make());
  std::vector<std::thread> pool;
  std::vector<std::string> got(8);
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = cache.fetch_raw(i % 2 ? "A026222" : "A026136"); });
  for (auto& t : pool) t.join();
  EXPECT_EQ(*fake.calls, 2);
  for (int i = 2; i < 8; ++i) EXPECT_EQ(got[i], got[i % 2]);
}

TEST(Cache, DirectoryResolution) {
  EXPECT_EQ(resolve_cache_dir(fs::path("/x/y")), fs::path("/x/y"));
  ::setenv(kCacheEnv, "/from/env", 1);
  EXPECT_EQ(resolve_cache_dir(), fs::path("/from/env"));
  EXPECT_EQ(resolve_cache_dir(fs::path("explicit")), fs::path("explicit"));
  ::unsetenv(kCacheEnv);
  EXPECT_EQ(resolve_cache_dir(), fs::path("oeis-cache"));
  EXPECT_EQ(BFileCache("d").path_of("26136"), fs::path("d") / "A026136.txt");
}

TEST(Cache, LoadMissingFile) { EXPECT_THROW(load_bfile(kFixtures / "A000000.txt"), FetchError); }
