#include "takagi/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "takagi/dimension.hpp"
#include "takagi/expansion.hpp"
#include "takagi/level_sets.hpp"
#include "takagi/omega.hpp"
#include "takagi/random_gen.hpp"
#include "takagi/singular.hpp"
#include "takagi/svg.hpp"
#include "takagi/takagi_eval.hpp"
#include "takagi/verify.hpp"
#include "takagi/version.hpp"

namespace takagi {

namespace {

using KV = std::pair<std::string, std::string>;

std::string yn(bool b) { return b ? "yes" : "no"; }

// Quote a CSV field only when it needs it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Table base_table(const RunConfig& cfg) {
  Table t;
  t.meta.emplace_back("tool", kToolName);
  t.meta.emplace_back("version", kVersion);
  t.meta.emplace_back("command", cfg.command);
  for (const KV& kv : cfg.describe()) t.meta.emplace_back(kv);
  return t;
}

Table eval_table(const RunConfig& cfg) {
  Table t = base_table(cfg);
  const BinaryExpansion x = parse_expansion(cfg.x_literal);
  const Rational value = x.value();
  const Rational tau_x = tau(x);
  const SingularValue s = tau_s(x);
  const OmegaResult om = omega_membership(x);
  const BinaryExpansion lm = leftmost_equivalent(x);
  const LocalLevelSet cls = local_level_set(x);
  t.columns = {"x",    "value",     "tau",      "tau_s",     "in_omega",
               "first_violation", "leftmost", "class_size"};
  t.rows.push_back({x.str(), value.str(), tau_x.str(), s.value.str(), yn(om.member),
                    std::to_string(om.member ? 0 : om.first_violation), lm.str(),
                    cls.finite ? cls.expansion_count.get_str() : "uncountable"});
  std::ostringstream sum;
  sum << "tau(" << x.str() << ") = " << tau_x.str() << ", singular value "
      << s.value.str() << ", deficient-digit member: " << yn(om.member)
      << ", level class "
      << (cls.finite ? cls.expansion_count.get_str() + " expansions" : "uncountable");
  t.summary = sum.str();
  return t;
}

Table levelset_table(const RunConfig& cfg) {
  Table t = base_table(cfg);
  const Rational y = Rational::parse(cfg.y_literal);
  const LevelCover cover = enumerate_level_cover(y, cfg.depth);
  t.meta.emplace_back("in_range", yn(cover.in_range));
  t.columns = {"kind", "left", "right", "value", "expansion"};
  for (const DyadicInterval& iv : cover.possible)
    t.rows.push_back({"interval", iv.left().str(), iv.right().str(), "", ""});
  for (const ConfirmedPoint& c : cover.confirmed)
    t.rows.push_back({"confirmed", "", "", c.value.str(), c.point.str()});
  std::ostringstream sum;
  if (!cover.in_range) {
    sum << "level " << y.str() << " lies outside the range [0, 2/3]; level set empty";
  } else {
    sum << "level " << y.str() << " at depth " << cfg.depth << ": "
        << cover.possible.size() << " surviving intervals, " << cover.confirmed.size()
        << " confirmed points";
  }
  t.summary = sum.str();
  return t;
}

Table localset_table(const RunConfig& cfg) {
  Table t = base_table(cfg);
  const BinaryExpansion x = parse_expansion(cfg.x_literal);
  const LocalLevelSet s = local_level_set(x);
  const auto members = enumerate_local_level_set(x, cfg.block_limit);
  t.meta.emplace_back("leftmost", s.representative.str());
  t.meta.emplace_back("finite", yn(s.finite));
  t.meta.emplace_back("expansions",
                      s.finite ? s.expansion_count.get_str() : "uncountable");
  t.columns = {"index", "expansion", "value", "tau"};
  std::vector<BinaryExpansion> sorted = members;
  std::sort(sorted.begin(), sorted.end(),
            [](const BinaryExpansion& a, const BinaryExpansion& b) { return a < b; });
  for (size_t i = 0; i < sorted.size(); ++i)
    t.rows.push_back({std::to_string(i), sorted[i].str(), sorted[i].value().str(),
                      tau(sorted[i]).str()});
  std::ostringstream sum;
  sum << "local level set of " << x.str() << ": "
      << (s.finite ? s.expansion_count.get_str() + " expansions"
                   : std::string("uncountable"))
      << ", " << sorted.size() << " enumerated through " << cfg.block_limit
      << " blocks, leftmost " << s.representative.str();
  t.summary = sum.str();
  return t;
}

Table omega_table(const RunConfig& cfg) {
  Table t = base_table(cfg);
  const std::string what = cfg.what.empty() ? "intervals" : cfg.what;
  if (what == "intervals") {
    const auto ivs = removed_intervals_up_to(cfg.max_len);
    t.columns = {"B", "l", "k", "left_p/q", "right_p/q", "length_p/q"};
    Rational total(0);
    for (const RemovedInterval& iv : ivs) {
      total += iv.length;
      t.rows.push_back({iv.breakpoint ? word_to_string(iv.breakpoint->word) : "",
                        std::to_string(iv.l), std::to_string(iv.k),
                        iv.left.value().str(), iv.right.value().str(),
                        iv.length.str()});
    }
    std::ostringstream sum;
    sum << ivs.size() << " removed intervals through word length " << cfg.max_len
        << ", total length " << total.str();
    t.summary = sum.str();
  } else if (what == "breakpoints") {
    t.columns = {"m", "kind", "word", "r"};
    Integer full_total = 0, small_total = 0;
    for (int m = 0; m <= cfg.m_max; ++m) {
      for (const BreakpointWord& b : enumerate_breakpoints(m, BreakpointKind::kFull)) {
        ++full_total;
        t.rows.push_back({std::to_string(m), "full", word_to_string(b.word),
                          std::to_string(r_of(b.word))});
      }
      for (const BreakpointWord& b : enumerate_breakpoints(m, BreakpointKind::kSmall)) {
        ++small_total;
        t.rows.push_back({std::to_string(m), "small", word_to_string(b.word),
                          std::to_string(r_of(b.word))});
      }
    }
    std::ostringstream sum;
    sum << "breakpoint words through m=" << cfg.m_max << ": " << full_total.get_str()
        << " full, " << small_total.get_str() << " small";
    t.summary = sum.str();
  } else if (what == "sums") {
    t.columns = {"max_len", "intervals", "total_p/q", "gap_p/q"};
    Rational last(0);
    size_t last_count = 0;
    for (int len = 0; len <= cfg.max_len; len += 2) {
      last = removed_length_partial_sum(len);
      last_count = removed_intervals_up_to(len).size();
      t.rows.push_back({std::to_string(len), std::to_string(last_count), last.str(),
                        (Rational(1) - last).str()});
    }
    std::ostringstream sum;
    sum << "removed length through " << cfg.max_len << ": " << last.str() << " over "
        << last_count << " intervals, gap " << (Rational(1) - last).str();
    t.summary = sum.str();
  } else {
    throw std::invalid_argument("omega: unknown selector '" + what +
                                "' (intervals | breakpoints | sums)");
  }
  return t;
}

Table measure_table(const RunConfig& cfg) {
  Table t = base_table(cfg);
  t.columns = {"m", "count", "mass_p/q", "cumulative_p/q"};
  for (int m = 0; m <= cfg.m_max; ++m) {
    const Integer count = catalan(m);
    const Rational level_mass = Rational(count) * Rational::pow2(-(2 * m + 1));
    t.rows.push_back({std::to_string(m), count.get_str(), level_mass.str(),
                      mass_partial_sum(m).str()});
  }
  // Seeded spot checks of the exact renormalization identity.
  Rng rng(cfg.seed);
  int passed = 0;
  for (int i = 0; i < cfg.checks; ++i) {
    const int m = rng.range(0, 5);
    const auto level = enumerate_breakpoints(m, BreakpointKind::kFull);
    const BreakpointWord& b = level[static_cast<size_t>(rng.below(level.size()))];
    BinaryExpansion t1 = random_omega_member(rng, 12);
    BinaryExpansion t2 = random_omega_member(rng, 12);
    if (t2.value() < t1.value()) std::swap(t1, t2);
    if (verify_selfsimilar_measure(b, t1, t2)) ++passed;
  }
  t.meta.emplace_back("selfsimilar_checks", std::to_string(cfg.checks));
  t.meta.emplace_back("selfsimilar_passed", std::to_string(passed));
  std::ostringstream sum;
  sum << "cell masses through m=" << cfg.m_max << ", cumulative "
      << mass_partial_sum(cfg.m_max).str() << "; " << passed << "/" << cfg.checks
      << " self-similarity checks passed";
  t.summary = sum.str();
  return t;
}

Table dim_table(const RunConfig& cfg) {
  Table t = base_table(cfg);
  const std::string what = cfg.what.empty() ? "boxes" : cfg.what;
  if (what == "alphabet") {
    const AlphabetX a = alphabet_X(cfg.r);
    t.columns = {"r", "index", "word"};
    for (size_t i = 0; i < a.words.size(); ++i)
      t.rows.push_back({std::to_string(cfg.r), std::to_string(i),
                        word_to_string(a.words[i])});
    std::ostringstream sum;
    sum << "first-return alphabet at r=" << cfg.r << ": " << a.words.size()
        << " words of length " << 2 * cfg.r;
    t.summary = sum.str();
  } else if (what == "boxes") {
    const DimensionEstimate e = box_dimension_gamma(cfg.r, cfg.k_max);
    t.columns = {"r", "depth", "boxes"};
    for (const auto& [depth, boxes] : e.scales)
      t.rows.push_back({std::to_string(cfg.r), std::to_string(depth), boxes.get_str()});
    t.meta.emplace_back("dim_lo", e.dimension.lo.str());
    t.meta.emplace_back("dim_hi", e.dimension.hi.str());
    t.meta.emplace_back("dim_exact", yn(e.dimension.exact));
    std::ostringstream sum;
    sum << "box counts for the r=" << cfg.r << " flat set; dimension "
        << e.dimension.str();
    t.summary = sum.str();
  } else if (what == "spectrum") {
    const SpectrumTable table = spectrum_table(cfg.r_max);
    t.columns = {"r",          "alpha",        "count",    "gamma_dim_lo",
                 "gamma_dim_hi", "bound_lo", "bound_hi", "exceeds"};
    for (const SpectrumRow& row : table.rows)
      t.rows.push_back({std::to_string(row.r), row.alpha.str(), row.count.get_str(),
                        row.gamma_dim.lo.str(), row.gamma_dim.hi.str(),
                        row.abscissa_bound.lo.str(), row.abscissa_bound.hi.str(),
                        row.exceeds ? yn(*row.exceeds) : "undecided"});
    t.meta.emplace_back("r0", std::to_string(table.r0));
    std::ostringstream sum;
    sum << "dimension spectrum through r=" << cfg.r_max
        << "; certified crossing from r0=" << table.r0;
    t.summary = sum.str();
  } else if (what == "bilip") {
    const auto pts = enumerate_gamma_points(cfg.r, cfg.k_max);
    if (pts.size() > 64)
      throw std::invalid_argument(
          "dim bilip: too many points (" + std::to_string(pts.size()) +
          "); lower --r or --k-max");
    t.columns = {"r", "x1", "x2", "ratio", "ok"};
    size_t ok_count = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = i + 1; j < pts.size(); ++j) {
        const BilipschitzResult b = bilipschitz_check(cfg.r, pts[i], pts[j]);
        ok_count += b.ok;
        t.rows.push_back({std::to_string(cfg.r), pts[i].value().str(),
                          pts[j].value().str(), b.ratio.str(), yn(b.ok)});
      }
    }
    std::ostringstream sum;
    sum << "distortion on " << pts.size() << " grid points at r=" << cfg.r << ": "
        << ok_count << "/" << t.rows.size() << " pairs within 2^(+-2r)";
    t.summary = sum.str();
  } else {
    throw std::invalid_argument("dim: unknown selector '" + what +
                                "' (alphabet | boxes | spectrum | bilip)");
  }
  return t;
}

Table verify_table(const RunConfig& cfg) {
  Table t = base_table(cfg);
  const auto results = run_suite(cfg.suite, cfg.seed);
  t.columns = {"suite", "check", "pass", "detail"};
  size_t failed = 0;
  for (const CheckResult& r : results) {
    failed += !r.pass;
    t.rows.push_back({r.suite, r.name, yn(r.pass), r.detail});
  }
  t.meta.emplace_back("failed", std::to_string(failed));
  std::ostringstream sum;
  sum << "suite " << cfg.suite << ": " << results.size() << " checks, " << failed
      << " failed";
  t.summary = sum.str();
  return t;
}

}  // namespace

std::vector<KV> RunConfig::describe() const {
  std::vector<KV> out;
  if (command == "eval") {
    out.emplace_back("x", x_literal);
    out.emplace_back("depth", std::to_string(depth));
  } else if (command == "levelset") {
    out.emplace_back("y", y_literal);
    out.emplace_back("depth", std::to_string(depth));
  } else if (command == "localset") {
    out.emplace_back("x", x_literal);
    out.emplace_back("blocks", std::to_string(block_limit));
  } else if (command == "omega") {
    out.emplace_back("what", what.empty() ? "intervals" : what);
    out.emplace_back("max_len", std::to_string(max_len));
    out.emplace_back("m_max", std::to_string(m_max));
  } else if (command == "measure") {
    out.emplace_back("m_max", std::to_string(m_max));
    out.emplace_back("checks", std::to_string(checks));
  } else if (command == "dim") {
    out.emplace_back("what", what.empty() ? "boxes" : what);
    out.emplace_back("r", std::to_string(r));
    out.emplace_back("k_max", std::to_string(k_max));
    out.emplace_back("r_max", std::to_string(r_max));
  } else if (command == "verify") {
    out.emplace_back("suite", suite);
  }
  out.emplace_back("format", format);
  out.emplace_back("seed", std::to_string(seed));
  return out;
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (const KV& kv : t.meta) out << "# " << kv.first << "=" << kv.second << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << csv_field(t.columns[i]);
  out << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["command"] = "";
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const KV& kv : t.meta) {
    if (kv.first == "command")
      j["command"] = kv.second;
    else
      config[kv.first] = kv.second;
  }
  j["config"] = std::move(config);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
      obj[t.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

Table run_command_table(const RunConfig& cfg) {
  if (cfg.depth < 0 || cfg.depth > 64)
    throw std::invalid_argument("depth must lie in [0, 64]");
  if (cfg.command == "eval") return eval_table(cfg);
  if (cfg.command == "levelset") return levelset_table(cfg);
  if (cfg.command == "localset") return localset_table(cfg);
  if (cfg.command == "omega") return omega_table(cfg);
  if (cfg.command == "measure") return measure_table(cfg);
  if (cfg.command == "dim") return dim_table(cfg);
  if (cfg.command == "verify") return verify_table(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

std::string run_command_svg(const RunConfig& cfg) {
  if (cfg.depth < 0 || cfg.depth > 64)
    throw std::invalid_argument("depth must lie in [0, 64]");
  if (cfg.command == "eval") return svg_graph(std::min(cfg.depth, 12));
  if (cfg.command == "levelset") {
    const Rational y = Rational::parse(cfg.y_literal);
    return svg_cover(enumerate_level_cover(y, cfg.depth), std::min(cfg.depth, 10));
  }
  if (cfg.command == "measure") return svg_staircase(std::min(cfg.m_max * 2, 16));
  if (cfg.command == "dim") return svg_spectrum(spectrum_table(cfg.r_max));
  throw std::invalid_argument("no svg rendering for command '" + cfg.command + "'");
}

}  // namespace takagi
