#include "gapsets/cli/app.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gapsets/census.hpp"
#include "gapsets/cli/bfile.hpp"
#include "gapsets/cli/count_cache.hpp"
#include "gapsets/cli/tables.hpp"
#include "gapsets/compositions.hpp"
#include "gapsets/formulas.hpp"
#include "gapsets/kunz.hpp"
#include "gapsets/sequences.hpp"
#include "json.hpp"

namespace gapsets::cli {

namespace {

using nlohmann::json;

/// Thrown by command handlers for bad flag combinations or values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Genera beyond this need --force for full censuses (the walk is 2^{g-1}).
constexpr std::uint32_t kDeskScaleGenus = 22;

// First terms of A007323, used to sanity-check b-file offsets.
constexpr std::uint64_t kKnownFirstTerms[] = {1, 1, 2, 4, 7, 12, 23, 39, 67, 118};

struct GlobalOptions {
  std::string format = "plain";
  unsigned jobs = 1;
  std::string cache_path;
  bool force = false;
};

struct Context {
  GlobalOptions global;
  std::ostream& out;
  std::ostream& err;
  Format format() const { return parse_format(global.format); }
};

std::string braces(const FiniteSet& s) { return "{" + s.to_string() + "}"; }

json query_json(const CensusQuery& q) {
  return {{"g", q.genus},
          {"depth", q.depth.to_string()},
          {"mult", q.multiplicity ? json(*q.multiplicity) : json(nullptr)}};
}

// ---------------------------------------------------------------- count

struct FilterFlags {
  std::uint32_t genus = 0;
  std::optional<std::uint32_t> depth;
  std::optional<std::uint32_t> max_depth;
  std::optional<std::uint32_t> mult;

  void attach(CLI::App* cmd) {
    cmd->add_option("--genus,-g", genus, "Genus")->required();
    auto* d = cmd->add_option("--depth,-q", depth, "Exact depth");
    auto* md = cmd->add_option("--max-depth", max_depth, "Depth upper bound");
    d->excludes(md);
    cmd->add_option("--mult,-m", mult, "Exact multiplicity (>= 2)")->check(CLI::Range(2u, 1u << 20));
  }

  CensusQuery query() const {
    CensusQuery q{genus, DepthFilter::any(), mult};
    if (depth) q.depth = DepthFilter::exact(*depth);
    if (max_depth) q.depth = DepthFilter::at_most(*max_depth);
    return q;
  }
};

void guard_genus(const Context& ctx, const CensusQuery& q) {
  const bool cheap = q.multiplicity && *q.multiplicity <= 6;
  if (!cheap && q.genus > kDeskScaleGenus + 8 && !ctx.global.force)
    throw UsageError("genus " + std::to_string(q.genus) + " is beyond desk scale; pass --force to run anyway");
}

int cmd_count(Context& ctx, const FilterFlags& flags, std::optional<std::size_t> self_check) {
  const CensusQuery q = flags.query();
  guard_genus(ctx, q);
  std::optional<CountCache> cache;
  if (!ctx.global.cache_path.empty()) cache = CountCache::load(ctx.global.cache_path);

  if (self_check) {
    if (!cache) throw UsageError("--self-check needs --cache");
    const auto report = cache->self_check(*self_check, 12, std::random_device{}(), [&](const CensusQuery& cq) {
      return count_gapsets(cq, {.jobs = ctx.global.jobs}).count;
    });
    for (const auto& [mq, fresh] : report.mismatches)
      ctx.err << "cache mismatch: g=" << mq.genus << " depth " << mq.depth.to_string() << " mult "
              << (mq.multiplicity ? std::to_string(*mq.multiplicity) : "any") << ": cached " << *cache->lookup(mq)
              << ", recomputed " << fresh << '\n';
    ctx.err << "cache self-check: " << report.checked << " entries, " << report.mismatches.size() << " mismatches\n";
    if (!report.mismatches.empty()) return kInvariantViolation;
  }

  CensusResult result;
  bool cached = false;
  if (cache) {
    if (auto hit = cache->lookup(q)) {
      result.query = q;
      result.count = *hit;
      result.shards = 0;
      cached = true;
    }
  }
  if (!cached) {
    result = count_gapsets(q, {.jobs = ctx.global.jobs});
    if (cache) {
      const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
      cache->store(q, result.count, now);
      cache->save(ctx.global.cache_path);
    }
  }

  const double elapsed_ms = std::chrono::duration<double, std::milli>(result.elapsed).count();
  switch (ctx.format()) {
    case Format::plain:
      ctx.out << result.count << '\n';
      break;
    case Format::json:
      ctx.out << json{{"query", query_json(q)},
                      {"count", result.count},
                      {"elapsed_ms", elapsed_ms},
                      {"shards", result.shards},
                      {"cached", cached}}
                     .dump()
              << '\n';
      break;
    case Format::csv:
      ctx.out << "g,depth,mult,count\n"
              << q.genus << ',' << q.depth.to_string() << ',' << (q.multiplicity ? std::to_string(*q.multiplicity) : "any")
              << ',' << result.count << '\n';
      break;
    case Format::markdown:
      ctx.out << "| g | depth | mult | count |\n|---|---|---|---|\n| " << q.genus << " | " << q.depth.to_string() << " | "
              << (q.multiplicity ? std::to_string(*q.multiplicity) : "any") << " | " << result.count << " |\n";
      break;
  }
  return kSuccess;
}

// ------------------------------------------------------------ enumerate

int cmd_enumerate(Context& ctx, const FilterFlags& flags, bool as_kunz) {
  const CensusQuery q = flags.query();
  guard_genus(ctx, q);
  const CensusResult result = count_gapsets(q, {.collect_items = true});
  const Format f = ctx.format();
  if (f == Format::json) {
    json items = json::array();
    for (const auto& gs : *result.items) {
      json item{{"set", std::vector<std::uint32_t>(gs.elements().elements().begin(), gs.elements().elements().end())},
                {"genus", gs.genus()},
                {"multiplicity", gs.multiplicity()},
                {"conductor", gs.conductor()},
                {"depth", gs.depth()}};
      if (gs.genus() > 0) {
        const auto v = pseudo_kunz(std::get<MExtension>(classify_m_extension(gs.elements(), gs.multiplicity())));
        item["modulus"] = v.modulus();
        item["kunz"] = std::vector<std::uint32_t>(v.coords().begin(), v.coords().end());
      }
      items.push_back(std::move(item));
    }
    ctx.out << json{{"query", query_json(q)}, {"count", result.count}, {"items", items}}.dump() << '\n';
    return kSuccess;
  }
  if (f == Format::csv) ctx.out << "set,genus,multiplicity,conductor,depth\n";
  for (const auto& gs : *result.items) {
    if (as_kunz) {
      if (gs.genus() == 0) {
        ctx.out << "-\n";
        continue;
      }
      ctx.out << pseudo_kunz(std::get<MExtension>(classify_m_extension(gs.elements(), gs.multiplicity()))).to_string()
              << '\n';
    } else if (f == Format::csv) {
      ctx.out << '"' << gs.elements().to_string() << "\"," << gs.genus() << ',' << gs.multiplicity() << ','
              << gs.conductor() << ',' << gs.depth() << '\n';
    } else {
      ctx.out << braces(gs.elements()) << '\n';
    }
  }
  if (f == Format::plain || f == Format::markdown) ctx.err << result.count << " gapsets\n";
  return kSuccess;
}

// ---------------------------------------------------------------- verify

int cmd_verify(Context& ctx, const std::string& set_text, std::optional<std::uint32_t> mult) {
  const FiniteSet s = FiniteSet::parse(set_text);
  const auto classified = classify_gapset(s);
  const bool is_gapset = std::holds_alternative<GapSet>(classified);
  const std::uint32_t least_missing = s.least_missing();
  const std::uint32_t conductor = s.empty() ? 0 : s.max() + 1;
  const std::uint32_t m = mult.value_or(least_missing);

  json report{{"set", braces(s)},
              {"gapset", is_gapset},
              {"genus", s.size()},
              {"multiplicity", least_missing},
              {"conductor", conductor},
              {"depth", ceil_div(conductor, least_missing)}};
  if (!is_gapset) {
    const auto& w = std::get<GapsetRejection>(classified);
    report["witness"] = {w.z, w.x, w.y};
  }
  std::optional<KunzVector> kunz;
  if (m >= 2) {
    report["modulus"] = m;
    const auto ext = classify_m_extension(s, m);
    report["m_extension"] = std::holds_alternative<MExtension>(ext);
    if (const auto* a = std::get_if<MExtension>(&ext)) {
      const AperySet ap = pseudo_apery(*a);
      kunz = pseudo_kunz(*a);
      report["pseudo_apery"] = ap.w;
      report["pseudo_kunz"] = std::vector<std::uint32_t>(kunz->coords().begin(), kunz->coords().end());
      const auto violation = find_kunz_violation(kunz->coords());
      report["kunz_system"] = !violation.has_value();
      if (violation) report["kunz_violation"] = {violation->i, violation->j};
    } else {
      report["m_extension_reason"] = std::get<MExtensionRejection>(ext).describe(m);
    }
  }

  if (ctx.format() == Format::json) {
    ctx.out << report.dump() << '\n';
  } else {
    ctx.out << "set: " << braces(s) << '\n';
    if (is_gapset) {
      ctx.out << "gapset: yes\n";
    } else {
      const auto& w = std::get<GapsetRejection>(classified);
      ctx.out << "gapset: no (witness " << w.z << " = " << w.x << " + " << w.y << ")\n";
    }
    ctx.out << "genus: " << s.size() << "\nmultiplicity: " << least_missing << "\nconductor: " << conductor
            << "\ndepth: " << ceil_div(conductor, least_missing) << '\n';
    if (m >= 2) {
      if (report["m_extension"].get<bool>()) {
        ctx.out << m << "-extension: yes\n";
        ctx.out << "pseudo-Apery set: {";
        const auto& w = report["pseudo_apery"];
        for (std::size_t i = 0; i < w.size(); ++i) ctx.out << (i ? "," : "") << w[i].get<std::uint64_t>();
        ctx.out << "}\npseudo-Kunz coordinates: " << Composition(std::vector<std::uint32_t>(kunz->coords().begin(), kunz->coords().end())).to_string()
                << '\n';
        if (report["kunz_system"].get<bool>())
          ctx.out << "Kunz system: satisfied\n";
        else
          ctx.out << "Kunz system: violated at (i,j) = (" << report["kunz_violation"][0] << ","
                  << report["kunz_violation"][1] << ")\n";
      } else {
        ctx.out << m << "-extension: no (" << report["m_extension_reason"].get<std::string>() << ")\n";
      }
    }
  }
  return is_gapset ? kSuccess : kNegativeVerdict;
}

// ------------------------------------------------------------- kunz / from-kunz

int cmd_kunz(Context& ctx, const std::string& set_text, std::optional<std::uint32_t> mult) {
  const FiniteSet s = FiniteSet::parse(set_text);
  const std::uint32_t m = mult.value_or(s.least_missing());
  if (m < 2) throw UsageError("the empty set has no modulus; pass --mult");
  const auto ext = classify_m_extension(s, m);
  if (const auto* rej = std::get_if<MExtensionRejection>(&ext)) {
    ctx.err << rej->describe(m) << '\n';
    return kNegativeVerdict;
  }
  const auto& a = std::get<MExtension>(ext);
  const AperySet ap = pseudo_apery(a);
  const KunzVector v = pseudo_kunz(a);
  const auto violation = find_kunz_violation(v.coords());
  if (ctx.format() == Format::json) {
    json j{{"modulus", m},
           {"pseudo_apery", ap.w},
           {"kunz", std::vector<std::uint32_t>(v.coords().begin(), v.coords().end())},
           {"kunz_system", !violation.has_value()}};
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << "pseudo-Apery set: {";
    for (std::size_t i = 0; i < ap.w.size(); ++i) ctx.out << (i ? "," : "") << ap.w[i];
    ctx.out << "}\nKunz vector: " << v.to_string() << '\n';
    ctx.out << "Kunz system: "
            << (violation ? "violated at (" + std::to_string(violation->i) + "," + std::to_string(violation->j) + ")"
                          : std::string("satisfied"))
            << '\n';
  }
  return kSuccess;
}

int cmd_from_kunz(Context& ctx, const std::string& vector_text, const std::string& composition_text) {
  if (vector_text.empty() == composition_text.empty())
    throw UsageError("pass exactly one of --vector or --composition");
  const KunzVector v = !vector_text.empty()
                           ? KunzVector::parse(vector_text)
                           : [&] {
                               const auto c = Composition::parse(composition_text);
                               return KunzVector::from_coords({c.parts().begin(), c.parts().end()});
                             }();
  const MExtension a = from_kunz(v);
  const auto violation = find_kunz_violation(v.coords());
  if (ctx.format() == Format::json) {
    json j{{"modulus", v.modulus()},
           {"set", std::vector<std::uint32_t>(a.elements().elements().begin(), a.elements().elements().end())},
           {"genus", a.genus()},
           {"depth", a.depth()},
           {"gapset", !violation.has_value()}};
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << v.modulus() << "-extension: " << braces(a.elements()) << "\ngenus: " << a.genus()
            << "\ndepth: " << a.depth() << "\ngapset: "
            << (violation ? "no, Kunz system violated at (" + std::to_string(violation->i) + "," +
                                std::to_string(violation->j) + ")"
                          : std::string("yes"))
            << '\n';
  }
  return kSuccess;
}

// ----------------------------------------------------------------- table

int cmd_table(Context& ctx, const std::string& which, std::optional<std::uint32_t> gmax_flag) {
  struct Spec {
    std::uint32_t default_gmax;
    std::uint32_t guard;
    std::function<Table(std::uint32_t, unsigned)> build;
  };
  const std::map<std::string, Spec> specs{
      {"t1", {10, kDeskScaleGenus, lower_bounds_table}},
      {"t2", {12, 40, multiplicity4_table}},
      {"t3", {10, kDeskScaleGenus, upper_bounds_table}},
      {"t4", {18, kDeskScaleGenus, depth_table}},
  };
  const auto it = specs.find(which);
  if (it == specs.end()) throw UsageError("unknown table '" + which + "' (expected t1, t2, t3 or t4)");
  const std::uint32_t gmax = gmax_flag.value_or(it->second.default_gmax);
  if (gmax > it->second.guard && !ctx.global.force)
    throw UsageError("gmax " + std::to_string(gmax) + " exceeds " + std::to_string(it->second.guard) +
                     " for " + which + "; pass --force to run anyway");
  ctx.out << render(it->second.build(gmax, ctx.global.jobs), ctx.format());
  return kSuccess;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(Context& ctx, std::uint32_t g, std::optional<std::uint32_t> M) {
  if (g < 1) throw UsageError("--genus must be >= 1");
  if (g > kDeskScaleGenus && !ctx.global.force)
    throw UsageError("genus beyond desk scale; pass --force to run anyway");
  const GenusCensus grid = census_grid(g, ctx.global.jobs);
  const BigCount lower = lower_bound_depth3(g);
  const BigCount n_prime = grid.count_depth_at_most(3);
  const BigCount n = grid.total();
  const BigCount all_extensions = BigCount::from_raw(BigCount::raw_type{1} << (g - 1));
  const auto counter = census_counter(ctx.global.jobs);

  std::vector<std::pair<std::string, BigCount>> uppers;
  const std::vector<std::uint32_t> cutoffs = M ? std::vector<std::uint32_t>{*M} : std::vector<std::uint32_t>{2, 3, 4};
  for (auto cut : cutoffs) {
    if (cut < 2) throw UsageError("--M must be >= 2");
    uppers.emplace_back("UB(M=" + std::to_string(cut) + ")", upper_bound_ng(g, cut, counter));
  }
  if (g >= 4) uppers.emplace_back("UB(closed N(m,g))", upper_bound_ng_closed(g));

  std::vector<std::string> violations;
  if (lower > n_prime) violations.push_back("lower bound exceeds n'_g");
  if (n_prime > n) violations.push_back("n'_g exceeds n_g");
  if (n > all_extensions) violations.push_back("n_g exceeds 2^{g-1}");
  for (const auto& [name, value] : uppers)
    if (n > value) violations.push_back("n_g exceeds " + name);

  if (ctx.format() == Format::json) {
    json j{{"g", g},
           {"lower", lower.to_string()},
           {"n_prime", n_prime.to_string()},
           {"n", n.to_string()},
           {"two_pow_g_minus_1", all_extensions.to_string()},
           {"violations", violations}};
    for (const auto& [name, value] : uppers) j["upper"][name] = value.to_string();
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << "F_{g+2}-P_{g+1} = " << lower << "\nn'_g = " << n_prime << "\nn_g = " << n << '\n';
    for (const auto& [name, value] : uppers) ctx.out << name << " = " << value << '\n';
    ctx.out << "2^{g-1} = " << all_extensions << '\n';
    ctx.out << lower << " <= " << n_prime << " <= " << n << " <= " << all_extensions << '\n';
  }
  for (const auto& v : violations) ctx.err << "bound violation: " << v << '\n';
  return violations.empty() ? kSuccess : kInvariantViolation;
}

// --------------------------------------------------------------- formula

int cmd_formula(Context& ctx, const std::string& which, std::optional<std::uint32_t> g, std::optional<std::uint32_t> q,
                std::optional<std::uint32_t> M, std::optional<std::uint32_t> m, bool closed_forms) {
  auto need = [](const std::optional<std::uint32_t>& v, const char* flag) {
    if (!v) throw UsageError(std::string("this formula needs ") + flag);
    return *v;
  };
  std::string value;
  std::string branch;
  if (which == "gq3" || which == "gq4" || which == "gq") {
    const auto gv = need(g, "--genus"), qv = need(q, "--depth");
    const FormulaAnswer a = which == "gq3" ? f_gq3(gv, qv) : which == "gq4" ? f_gq4(gv, qv) : f_gq(gv, qv);
    value = a.covered() ? std::to_string(*a.value) : "not covered";
    branch = a.branch;
  } else if (which == "lower") {
    value = lower_bound_depth3(need(g, "--genus")).to_string();
  } else if (which == "upper" || which == "upper-general") {
    const auto gv = need(g, "--genus"), Mv = need(M, "--M");
    if (gv < 1 || Mv < 2) throw UsageError("upper bound needs g >= 1 and M >= 2");
    const auto counter = census_counter(ctx.global.jobs);
    const UpperBoundOptions opts{closed_forms};
    value = (which == "upper" ? upper_bound_ng(gv, Mv, counter, opts) : upper_bound_ng_general(gv, Mv, counter, opts))
                .to_string();
  } else if (which == "upper-closed") {
    const auto gv = need(g, "--genus");
    if (gv < 4) throw UsageError("the closed upper bound needs g >= 4");
    value = upper_bound_ng_closed(gv).to_string();
  } else if (which == "window") {
    const auto gv = need(g, "--genus"), mv = need(m, "--mult");
    if (gv < 1 || mv < 2) throw UsageError("depth window needs g >= 1 and m >= 2");
    const DepthWindow w = depth_window(gv, mv);
    value = "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
  } else if (which == "N") {
    const auto v = multiplicity_count_closed(need(m, "--mult"), need(g, "--genus"));
    value = v ? std::to_string(*v) : "not covered";
  } else {
    throw UsageError("unknown formula '" + which + "'");
  }
  if (ctx.format() == Format::json) {
    ctx.out << json{{"formula", which}, {"value", value}, {"branch", branch}}.dump() << '\n';
  } else {
    ctx.out << value;
    if (!branch.empty()) ctx.out << "  [" << branch << "]";
    ctx.out << '\n';
  }
  return kSuccess;
}

// ------------------------------------------------------------------- seq

int cmd_seq(Context& ctx, const std::string& kind, std::int64_t n, std::optional<std::int64_t> to,
            std::optional<std::int64_t> k) {
  std::function<BigCount(std::int64_t)> term;
  if (kind == "fibonacci") {
    term = fibonacci;
  } else if (kind == "fibonacci-k") {
    if (!k) throw UsageError("fibonacci-k needs --k");
    term = [order = *k](std::int64_t i) { return fibonacci_k(order, i); };
  } else if (kind == "padovan") {
    term = padovan;
  } else if (kind == "convolution") {
    term = padovan_fibonacci_convolution;
  } else {
    throw UsageError("unknown sequence '" + kind + "'");
  }
  const std::int64_t last = to.value_or(n);
  if (last < n) throw UsageError("--to must be >= --n");
  // "index value" lines, the b-file layout.
  for (std::int64_t i = n; i <= last; ++i) ctx.out << i << ' ' << term(i) << '\n';
  return kSuccess;
}

// ------------------------------------------------------------------ oeis

int cmd_oeis(Context& ctx, const std::string& path, std::uint32_t gmax, std::int64_t offset) {
  const auto entries = read_bfile(path);
  std::map<std::int64_t, BigCount> by_genus;
  for (const auto& e : entries) by_genus[e.index - offset] = e.value;

  bool anchored = true;
  for (std::uint32_t g = 0; g < std::size(kKnownFirstTerms); ++g) {
    const auto it = by_genus.find(g);
    if (it != by_genus.end() && it->second != BigCount(kKnownFirstTerms[g])) anchored = false;
  }
  if (!anchored)
    ctx.err << "note: the file's first terms differ from 1,1,2,4,7,12,23,39,67,118 at offset " << offset
            << "; check --offset\n";

  std::size_t matched = 0;
  std::vector<std::string> problems;
  for (std::uint32_t g = 0; g <= gmax; ++g) {
    const std::uint64_t census = census_grid(g, ctx.global.jobs).total();
    const auto it = by_genus.find(g);
    if (it == by_genus.end()) {
      problems.push_back("g=" + std::to_string(g) + ": missing from file (index " + std::to_string(g + offset) +
                         "), expected " + std::to_string(census));
    } else if (it->second != BigCount(census)) {
      problems.push_back("g=" + std::to_string(g) + ": file has " + it->second.to_string() + ", expected " +
                         std::to_string(census));
    } else {
      ++matched;
    }
  }
  if (ctx.format() == Format::json) {
    ctx.out << json{{"bfile", path}, {"gmax", gmax}, {"matched", matched}, {"problems", problems}}.dump() << '\n';
  } else {
    for (const auto& p : problems) ctx.out << "mismatch " << p << '\n';
    ctx.out << matched << " of " << (gmax + 1) << " terms match (g = 0.." << gmax << ")\n";
  }
  return problems.empty() ? kSuccess : kNegativeVerdict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gapsets, m-extensions and Kunz coordinates: census, formulas and bounds", "gapsets"};
  app.fallthrough();
  app.require_subcommand(1);

  Context ctx{{}, out, err};
  app.add_option("--format", ctx.global.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv", "markdown"}));
  app.add_option("--jobs,-j", ctx.global.jobs, "Worker threads for counting")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache", ctx.global.cache_path, "Count cache file (JSON)");
  app.add_flag("--force", ctx.global.force, "Allow runs beyond the desk-scale guards");

  std::function<int()> action;

  FilterFlags count_flags;
  std::optional<std::size_t> self_check;
  auto* count = app.add_subcommand("count", "Count gapsets by genus, depth and multiplicity");
  count_flags.attach(count);
  count->add_option("--self-check", self_check, "Recompute N random cached entries (g <= 12) first");
  count->callback([&] { action = [&] { return cmd_count(ctx, count_flags, self_check); }; });

  FilterFlags enum_flags;
  bool as_kunz = false;
  auto* enumerate = app.add_subcommand("enumerate", "List gapsets by genus, depth and multiplicity");
  enum_flags.attach(enumerate);
  enumerate->add_flag("--kunz", as_kunz, "Print Kunz vectors instead of sets");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(ctx, enum_flags, as_kunz); }; });

  std::string set_text;
  std::optional<std::uint32_t> set_mult;
  auto* verify = app.add_subcommand("verify", "Classify a finite set");
  verify->add_option("--set,-s", set_text, "Comma-separated increasing positive integers")->required();
  verify->add_option("--mult,-m", set_mult, "Modulus for the m-extension check");
  verify->callback([&] { action = [&] { return cmd_verify(ctx, set_text, set_mult); }; });

  auto* kunz = app.add_subcommand("kunz", "Pseudo-Apery set and Kunz vector of an m-extension");
  kunz->add_option("--set,-s", set_text, "Comma-separated increasing positive integers")->required();
  kunz->add_option("--mult,-m", set_mult, "Modulus (default: least missing positive integer)");
  kunz->callback([&] { action = [&] { return cmd_kunz(ctx, set_text, set_mult); }; });

  std::string vector_text, composition_text;
  auto* from = app.add_subcommand("from-kunz", "Rebuild the m-extension of a Kunz vector or tiling");
  from->add_option("--vector", vector_text, "m:k1,...,k_{m-1}");
  from->add_option("--composition", composition_text, "(c1,...,cn)");
  from->callback([&] { action = [&] { return cmd_from_kunz(ctx, vector_text, composition_text); }; });

  std::string which;
  std::optional<std::uint32_t> gmax;
  auto* table = app.add_subcommand("table", "Recompute one of the reference tables");
  table->add_option("--which", which, "t1 | t2 | t3 | t4")->required();
  table->add_option("--gmax", gmax, "Largest genus");
  table->callback([&] { action = [&] { return cmd_table(ctx, which, gmax); }; });

  std::uint32_t bounds_genus = 0;
  std::optional<std::uint32_t> bounds_M;
  auto* bounds = app.add_subcommand("bounds", "Lower/upper bounds around n_g");
  bounds->add_option("--genus,-g", bounds_genus, "Genus")->required();
  bounds->add_option("--M", bounds_M, "Single cutoff M >= 2 (default: 2, 3 and 4)");
  bounds->callback([&] { action = [&] { return cmd_bounds(ctx, bounds_genus, bounds_M); }; });

  std::string formula_which;
  std::optional<std::uint32_t> f_g, f_q, f_M, f_m;
  bool closed_forms = false;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed formula");
  formula->add_option("--which", formula_which, "gq3 | gq4 | gq | lower | upper | upper-general | upper-closed | window | N")
      ->required();
  formula->add_option("--genus,-g", f_g, "Genus");
  formula->add_option("--depth,-q", f_q, "Depth");
  formula->add_option("--M", f_M, "Cutoff for the upper bounds");
  formula->add_option("--mult,-m", f_m, "Multiplicity");
  formula->add_flag("--closed-forms", closed_forms, "Upper bounds: use closed #F(g,q,m) where available");
  formula->callback([&] { action = [&] { return cmd_formula(ctx, formula_which, f_g, f_q, f_M, f_m, closed_forms); }; });

  std::string seq_kind;
  std::int64_t seq_n = 0;
  std::optional<std::int64_t> seq_to, seq_k;
  auto* seq = app.add_subcommand("seq", "Fibonacci, k-generalized Fibonacci, Padovan and their convolution");
  seq->add_option("--kind", seq_kind, "fibonacci | fibonacci-k | padovan | convolution")->required();
  seq->add_option("--n", seq_n, "Index (first index with --to)")->required();
  seq->add_option("--to", seq_to, "Last index");
  seq->add_option("--k", seq_k, "Order for fibonacci-k");
  seq->callback([&] { action = [&] { return cmd_seq(ctx, seq_kind, seq_n, seq_to, seq_k); }; });

  std::string bfile;
  std::uint32_t oeis_gmax = 18;
  std::int64_t offset = 0;
  auto* oeis = app.add_subcommand("oeis", "Compare census n_g against a local OEIS b-file");
  oeis->add_option("--bfile", bfile, "Path to the b-file")->required();
  oeis->add_option("--gmax", oeis_gmax, "Largest genus to compare");
  oeis->add_option("--offset", offset, "File index that corresponds to genus 0");
  oeis->callback([&] { action = [&] { return cmd_oeis(ctx, bfile, oeis_gmax, offset); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BFileError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace gapsets::cli
