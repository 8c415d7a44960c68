#include "gapsets/census.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <charconv>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gapsets/compositions.hpp"
#include "gapsets/sequences.hpp"

namespace gapsets {

std::string DepthFilter::to_string() const {
  switch (kind) {
    case Kind::any: return "any";
    case Kind::exact: return "=" + std::to_string(value);
    case Kind::at_most: return "<=" + std::to_string(value);
  }
  return "any";
}

DepthFilter DepthFilter::parse(std::string_view text) {
  if (text == "any") return any();
  Kind kind = Kind::exact;
  if (text.starts_with("<=")) {
    kind = Kind::at_most;
    text.remove_prefix(2);
  } else if (text.starts_with("=")) {
    text.remove_prefix(1);
  } else {
    throw std::invalid_argument("depth filter: expected any, =q or <=q");
  }
  std::uint32_t q = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    throw std::invalid_argument("depth filter: bad depth '" + std::string(text) + "'");
  return {kind, q};
}

namespace {

void validate(const CensusQuery& q) {
  if (q.multiplicity && *q.multiplicity < 2)
    throw std::invalid_argument("census: exact multiplicity must be >= 2");
}

/// Composition filter for a query with genus >= 1, or nullopt when no
/// composition can match.
std::optional<CompositionFilter> filter_for(const CensusQuery& q) {
  CompositionFilter f;
  if (q.depth.kind != DepthFilter::Kind::any) {
    if (q.depth.value == 0) return std::nullopt;
    f.max_part = std::min(q.depth.value, q.genus);
  }
  if (q.multiplicity) {
    const std::uint32_t parts = *q.multiplicity - 1;
    if (parts > q.genus) return std::nullopt;
    f.part_count = parts;
  }
  return f;
}

bool keep(const CensusQuery& q, std::span<const std::uint32_t> parts) {
  if (q.depth.kind == DepthFilter::Kind::exact &&
      *std::max_element(parts.begin(), parts.end()) != q.depth.value)
    return false;
  return satisfies_kunz_system(parts);
}

bool empty_gapset_matches(const CensusQuery& q) { return !q.multiplicity && q.depth.admits(0); }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("census: count overflows 64 bits");
  return r;
}

/// Runs `work(first_part)` for every first-part value in [1, hi] on up to
/// `jobs` threads.
template <typename Work>
void run_shards(std::uint32_t hi, unsigned jobs, Work&& work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, hi));
  if (jobs == 1) {
    for (std::uint32_t v = 1; v <= hi; ++v) work(v);
    return;
  }
  std::atomic<std::uint32_t> next{1};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::uint32_t v = next++; v <= hi; v = next++) work(v);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t count_gapsets_shard(const CensusQuery& query, std::uint32_t first_part) {
  validate(query);
  if (query.genus == 0) return 0;
  auto filter = filter_for(query);
  if (!filter) return 0;
  filter->first_part = first_part;
  CompositionStream stream(query.genus, *filter);
  std::uint64_t n = 0;
  while (stream.next())
    if (keep(query, stream.parts())) ++n;
  return n;
}

CensusResult count_gapsets(const CensusQuery& query, const CensusOptions& options) {
  validate(query);
  const auto start = std::chrono::steady_clock::now();
  CensusResult result;
  result.query = query;
  result.shards = 1;
  if (options.collect_items) result.items.emplace();

  if (query.genus == 0) {
    if (empty_gapset_matches(query)) {
      result.count = 1;
      if (result.items) result.items->push_back(std::get<GapSet>(classify_gapset(FiniteSet())));
    }
  } else if (auto filter = filter_for(query)) {
    if (options.collect_items) {
      CompositionStream stream(query.genus, *filter);
      while (stream.next()) {
        if (!keep(query, stream.parts())) continue;
        auto classified = classify_gapset(sigma_inverse(stream.current()).elements());
        if (!std::holds_alternative<GapSet>(classified))
          throw std::logic_error("census: Kunz-admissible tiling did not yield a gapset");
        result.items->push_back(std::get<GapSet>(std::move(classified)));
        ++result.count;
      }
    } else {
      const std::uint32_t hi = filter->max_part.value_or(query.genus);
      std::atomic<std::uint64_t> total{0};
      run_shards(hi, options.jobs, [&](std::uint32_t v) {
        const std::uint64_t n = count_gapsets_shard(query, v);
        std::uint64_t seen = total.load();
        while (!total.compare_exchange_weak(seen, checked_add(seen, n))) {
        }
      });
      result.count = total.load();
      result.shards = std::max(1u, std::min<unsigned>(options.jobs, hi));
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::uint64_t count_m_extensions(std::uint32_t g) {
  if (g == 0 || g >= 64) throw std::invalid_argument("count_m_extensions: genus must be in [1, 63]");
  if (g <= 26) return stream_length(g);
  // c(r) = sum_{v=1}^{r} c(r - v), c(0) = 1: tilings split by first tile.
  std::vector<std::uint64_t> c(g + 1, 0);
  c[0] = 1;
  for (std::uint32_t r = 1; r <= g; ++r)
    for (std::uint32_t v = 1; v <= r; ++v) c[r] = checked_add(c[r], c[r - v]);
  return c[g];
}

std::uint64_t count_gapsets_depth_at_most(std::uint32_t g, std::uint32_t k) {
  return count_gapsets({g, DepthFilter::at_most(k), std::nullopt}).count;
}

GenusCensus::GenusCensus(std::uint32_t g)
    : genus_(g), cells_(static_cast<std::size_t>(g + 1) * (g + 2), 0) {}

std::uint64_t GenusCensus::count(std::uint32_t depth, std::uint32_t multiplicity) const {
  if (depth > genus_ || multiplicity > genus_ + 1) return 0;
  return cells_[static_cast<std::size_t>(depth) * (genus_ + 2) + multiplicity];
}

std::uint64_t GenusCensus::count_depth(std::uint32_t depth) const {
  std::uint64_t n = 0;
  for (std::uint32_t m = 0; m <= genus_ + 1; ++m) n += count(depth, m);
  return n;
}

std::uint64_t GenusCensus::count_depth_at_most(std::uint32_t depth) const {
  std::uint64_t n = 0;
  for (std::uint32_t q = 0; q <= std::min(depth, genus_); ++q) n += count_depth(q);
  return n;
}

std::uint64_t GenusCensus::count_multiplicity(std::uint32_t multiplicity) const {
  std::uint64_t n = 0;
  for (std::uint32_t q = 0; q <= genus_; ++q) n += count(q, multiplicity);
  return n;
}

std::uint64_t GenusCensus::total() const { return count_depth_at_most(genus_); }

void GenusCensus::add(std::uint32_t depth, std::uint32_t multiplicity, std::uint64_t n) {
  if (depth > genus_ || multiplicity > genus_ + 1) throw std::out_of_range("GenusCensus: cell out of range");
  auto& cell = cells_[static_cast<std::size_t>(depth) * (genus_ + 2) + multiplicity];
  cell = checked_add(cell, n);
}

void GenusCensus::merge(const GenusCensus& other) {
  if (other.genus_ != genus_) throw std::invalid_argument("GenusCensus: genus mismatch");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] = checked_add(cells_[i], other.cells_[i]);
}

GenusCensus census_grid(std::uint32_t g, unsigned jobs) {
  GenusCensus grid(g);
  if (g == 0) {
    grid.add(0, 1, 1);
    return grid;
  }
  std::mutex merge_mutex;
  run_shards(g, jobs, [&](std::uint32_t v) {
    GenusCensus local(g);
    CompositionFilter filter;
    filter.first_part = v;
    CompositionStream stream(g, filter);
    while (stream.next()) {
      const auto parts = stream.parts();
      if (!satisfies_kunz_system(parts)) continue;
      local.add(*std::max_element(parts.begin(), parts.end()), static_cast<std::uint32_t>(parts.size() + 1), 1);
    }
    std::lock_guard lock(merge_mutex);
    grid.merge(local);
  });
  return grid;
}

namespace {

void depth3_dfs(std::vector<std::uint32_t>& coords, std::uint32_t remaining, bool one_seen, bool three_seen,
                const std::function<void(const KunzVector&)>& visit) {
  if (remaining == 0) {
    if (three_seen) visit(KunzVector::from_coords(coords));
    return;
  }
  // A 1 may only follow the last 3, so once a 1 is placed no 3 may follow.
  for (std::uint32_t v = 1; v <= std::min(3u, remaining); ++v) {
    if (v == 3 && one_seen) break;
    coords.push_back(v);
    depth3_dfs(coords, remaining - v, one_seen || v == 1, three_seen || v == 3, visit);
    coords.pop_back();
  }
}

}  // namespace

void for_each_depth3_vector(std::uint32_t g, const std::function<void(const KunzVector&)>& visit) {
  std::vector<std::uint32_t> coords;
  coords.reserve(g);
  depth3_dfs(coords, g, false, false, visit);
}

std::vector<KunzVector> enumerate_depth3_family(std::uint32_t g) {
  std::vector<KunzVector> out;
  for_each_depth3_vector(g, [&](const KunzVector& v) { out.push_back(v); });
  return out;
}

std::uint64_t count_depth3_family(std::uint32_t g) {
  if (g < 3) throw std::invalid_argument("count_depth3_family: g must be >= 3");
  BigCount total = fibonacci(g - 2);
  for (std::int64_t n = 2; n <= std::int64_t(g) - 3; ++n) total += padovan(n) * fibonacci(g - 2 - n);
#ifndef NDEBUG
  std::uint64_t instances = 0;
  for_each_depth3_vector(g, [&](const KunzVector&) { ++instances; });
  assert(total == BigCount(instances));
#endif
  return total.to_u64();
}

}  // namespace gapsets
