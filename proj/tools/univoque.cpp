// Command-line front end: every library operation behind one binary with
// machine-readable JSON (default) or CSV output. Exit codes: 0 success,
// 2 usage or input error, 3 inconclusive result.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "univoque/cantor.hpp"
#include "univoque/components.hpp"
#include "univoque/expansions.hpp"
#include "univoque/matching.hpp"
#include "univoque/rational.hpp"
#include "univoque/solver.hpp"
#include "univoque/words.hpp"

using json = nlohmann::ordered_json;
using namespace univoque;

namespace {

using Clock = std::chrono::steady_clock;

SolveOptions options_from_env() {
  SolveOptions opts;
  if (const char* v = std::getenv("UNIVOQUE_MAX_ITERS")) {
    try {
      opts.max_iters = static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "UNIVOQUE_MAX_ITERS: not an unsigned integer");
    }
  }
  return opts;
}

json rat_json(const Rat& r) {
  Int num = r.get_num(), den = r.get_den();
  return json{{"num", num.get_str()}, {"den", den.get_str()}};
}

json interval_json(const RatInterval& iv, int digits) {
  return json{{"lo", rat_json(iv.lo)},
              {"hi", rat_json(iv.hi)},
              {"lo_decimal", to_decimal(iv.lo, digits)},
              {"hi_decimal", to_decimal(iv.hi, digits)}};
}

// Decimal rendering contract: the midpoint of an enclosure two guard digits
// tighter than the requested tolerance, rounded to the tolerance's digit
// count, cannot be off by more than one unit in a digit the tolerance never
// promised. Solve-like commands therefore tighten internally by 1/100.
Rat guarded(const Rat& tol) { return Rat(tol / 100); }

json enclosure_json(const BaseEnclosure& e, const Rat& tol) {
  int digits = digits_for_tol(tol);
  return json{{"lo", rat_json(e.lo)},
              {"hi", rat_json(e.hi)},
              {"decimal", to_decimal(e.mid(), digits)}};
}

int emit(const std::string& command, const json& params, const json& result,
         const json& precision, Clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start)
                .count();
  json env;
  env["schema_version"] = 1;
  env["command"] = command;
  env["params"] = params;
  env["result"] = result;
  env["precision"] = precision;
  env["timing_ms"] = static_cast<std::int64_t>(ms);
  std::cout << env.dump(2) << "\n";
  return 0;
}

// Rows shared by `level` and `nm`: intervals are reported by their outer
// enclosure (true interval inside [lo, hi]); gaps by their certified core
// (true gap contains (lo, hi)).
void level_rows(const CantorLevel& level, int digits, json* out_json,
                std::string* out_csv) {
  struct Row {
    std::string word, kind;
    Rat lo, hi;
  };
  std::vector<Row> rows;
  for (const auto& leaf : level.leaves)
    rows.push_back({level.word_of(leaf.tail).str(), "interval", leaf.left.lo,
                    leaf.right.hi});
  for (const auto& gap : level.gaps)
    rows.push_back(
        {level.word_of(gap.tail).str(), "gap", gap.q2.hi, gap.q3.lo});
  if (out_json) {
    json entries = json::array();
    for (const auto& r : rows)
      entries.push_back(json{{"word", r.word},
                             {"kind", r.kind},
                             {"lo", rat_json(r.lo)},
                             {"hi", rat_json(r.hi)},
                             {"lo_decimal", to_decimal(r.lo, digits)},
                             {"hi_decimal", to_decimal(r.hi, digits)}});
    (*out_json)["stem"] = level.stem.str();
    (*out_json)["depth"] = level.depth;
    (*out_json)["run_bound"] = level.run_bound;
    (*out_json)["entries"] = std::move(entries);
  }
  if (out_csv) {
    std::string csv = "word,kind,lo,hi\n";
    for (const auto& r : rows)
      csv += r.word + "," + r.kind + "," + format_rational(r.lo) + "," +
             format_rational(r.hi) + "\n";
    *out_csv = std::move(csv);
  }
}

struct Args {
  std::string x, q, seq, word, tol = "1e-5", lambda, alpha, from, to;
  std::string format = "json", mode = "greedy", scale = "linear";
  std::size_t j = 1, m = 3, depth = 0, n = 32, budget = 64, count = 0;
  std::size_t k = 0, jmax = 16;
};

int run(int argc, char** argv) {
  CLI::App app{"Validated constructions of univoque-base Cantor sets"};
  app.require_subcommand(1);
  Args a;

  auto* c_eval = app.add_subcommand("eval", "Exact value of a digit series");
  c_eval->add_option("--seq", a.seq)->required();
  c_eval->add_option("--q", a.q)->required();

  auto* c_expand = app.add_subcommand("expand", "Expansion digits of x in base q");
  c_expand->add_option("--x", a.x)->required();
  c_expand->add_option("--q", a.q)->required();
  c_expand->add_option("--depth", a.n);
  c_expand->add_option("--mode", a.mode)
      ->check(CLI::IsMember({"greedy", "quasi-greedy"}));

  auto* c_dyadic = app.add_subcommand("dyadic", "Base-2 expansion of x");
  c_dyadic->add_option("--x", a.x)->required();

  auto* c_unique = app.add_subcommand("unique", "Uniqueness of an expansion");
  c_unique->add_option("--seq", a.seq)->required();
  c_unique->add_option("--q", a.q)->required();
  c_unique->add_option("--depth", a.depth)->default_val(std::size_t{64});

  auto* c_solve = app.add_subcommand("solve", "Base with a prescribed expansion value");
  c_solve->add_option("--seq", a.seq)->required();
  c_solve->add_option("--x", a.x)->required();
  c_solve->add_option("--tol", a.tol);

  auto* c_dec = app.add_subcommand("decompose", "Case data of the base-2 expansion of x");
  c_dec->add_option("--x", a.x)->required();
  c_dec->add_option("--j", a.j);

  auto* c_level = app.add_subcommand("level", "Realized intervals and gaps of a level set");
  c_level->add_option("--x", a.x)->required();
  c_level->add_option("--j", a.j);
  c_level->add_option("--depth", a.depth)->required();
  c_level->add_option("--tol", a.tol);
  c_level->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv"}));

  auto* c_thick = app.add_subcommand("thickness", "Thickness of a realized level");
  c_thick->add_option("--x", a.x)->required();
  c_thick->add_option("--j", a.j);
  c_thick->add_option("--depth", a.depth)->required();
  c_thick->add_option("--tol", a.tol);
  c_thick->add_option("--scale", a.scale)->check(CLI::IsMember({"linear", "log"}));

  auto* c_sum = app.add_subcommand("sumcover", "Merged cover of A + lambda*A over a level");
  c_sum->add_option("--x", a.x)->required();
  c_sum->add_option("--j", a.j);
  c_sum->add_option("--depth", a.depth)->required();
  c_sum->add_option("--tol", a.tol);
  c_sum->add_option("--lambda", a.lambda)->required();

  auto* c_thr = app.add_subcommand("thresholdj", "Smallest level passing the gap-domination conditions");
  c_thr->add_option("--x", a.x)->required();
  c_thr->add_option("--jmax", a.jmax);

  auto* c_match = app.add_subcommand("match", "Orbit matching verdict for one alpha");
  c_match->add_option("--alpha", a.alpha)->required();
  c_match->add_option("--budget", a.budget);

  auto* c_sweep = app.add_subcommand("match-sweep", "Matching verdicts over an alpha grid (CSV)");
  c_sweep->add_option("--from", a.from)->required();
  c_sweep->add_option("--to", a.to)->required();
  c_sweep->add_option("--count", a.count)->required();
  c_sweep->add_option("--budget", a.budget);

  auto* c_nm = app.add_subcommand("nm", "Alpha-space level of the run-constrained family");
  c_nm->add_option("--m", a.m)->required();
  c_nm->add_option("--depth", a.depth)->required();
  c_nm->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv"}));

  auto* c_comp = app.add_subcommand("component", "Endpoints attached to an admissible word");
  c_comp->add_option("--word", a.word)->required();
  c_comp->add_option("--tol", a.tol);

  auto* c_prop = app.add_subcommand("prop51", "Certified sum/product gap inequalities");
  c_prop->add_option("--word", a.word)->required();
  c_prop->add_option("--tol", a.tol);

  auto* c_kl = app.add_subcommand("klconstant", "Smallest univoque base");
  c_kl->add_option("--tol", a.tol);

  auto* c_ent = app.add_subcommand("entropy", "Block-counting entropy of the run-constrained shift");
  c_ent->add_option("--m", a.m)->required();
  c_ent->add_option("--depth", a.k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Clock::time_point start = Clock::now();
  const SolveOptions opts = options_from_env();

  if (c_eval->parsed()) {
    SeqLiteral lit = parse_seq_literal(a.seq);
    Rat q = parse_rational(a.q);
    Rat v = eval_series(lit.to_word(), q);
    json result{{"value", rat_json(v)}, {"decimal", to_decimal(v, 12)}};
    return emit("eval", {{"seq", lit.str()}, {"q", format_rational(q)}},
                result, {{"exact", true}}, start);
  }

  if (c_expand->parsed()) {
    Rat x = parse_rational(a.x), q = parse_rational(a.q);
    ExpansionMode mode = a.mode == "greedy" ? ExpansionMode::Greedy
                                            : ExpansionMode::QuasiGreedy;
    FiniteWord digits = expansion_digits(x, q, a.n, mode);
    json result{{"digits", digits.str()}, {"mode", a.mode}};
    return emit("expand",
                {{"x", format_rational(x)},
                 {"q", format_rational(q)},
                 {"n", a.n},
                 {"mode", a.mode}},
                result, {{"depth", a.n}}, start);
  }

  if (c_dyadic->parsed()) {
    Rat x = parse_rational(a.x);
    EventuallyPeriodicWord w = dyadic_expansion(x);
    json result{{"preperiod", w.preperiod().str()},
                {"period", w.period().str()},
                {"literal", w.str()}};
    return emit("dyadic", {{"x", format_rational(x)}}, result,
                {{"exact", true}}, start);
  }

  if (c_unique->parsed()) {
    SeqLiteral lit = parse_seq_literal(a.seq);
    Rat q = parse_rational(a.q);
    UniquenessVerdict v =
        is_unique_expansion(lit.to_word(), RatInterval::point(q), a.depth);
    const char* kind = v.unique() ? "unique"
                       : v.not_unique() ? "not-unique"
                                        : "unknown";
    json result{{"verdict", kind}, {"depth", v.depth}};
    return emit("unique",
                {{"seq", lit.str()},
                 {"q", format_rational(q)},
                 {"depth", a.depth}},
                result, {{"depth", a.depth}}, start);
  }

  if (c_solve->parsed()) {
    SeqLiteral lit = parse_seq_literal(a.seq);
    Rat x = parse_rational(a.x), tol = parse_rational(a.tol);
    BaseEnclosure e = solve_base(lit.to_word(), x, default_univoque_bracket(),
                                 guarded(tol), opts);
    return emit("solve",
                {{"seq", lit.str()},
                 {"x", format_rational(x)},
                 {"tol", format_rational(tol)}},
                enclosure_json(e, tol), {{"tol", format_rational(tol)}},
                start);
  }

  if (c_dec->parsed()) {
    Rat x = parse_rational(a.x);
    CaseDecomposition dec = decompose(x);
    json result{{"case", expansion_case_name(dec.expansion_case())},
                {"m_offset", dec.m_offset()},
                {"dyadic", dec.dyadic().str()},
                {"j", a.j},
                {"run_bound", dec.run_bound(a.j)},
                {"stem", dec.stem(a.j).str()}};
    return emit("decompose", {{"x", format_rational(x)}, {"j", a.j}}, result,
                {{"exact", true}}, start);
  }

  if (c_level->parsed() || c_nm->parsed()) {
    CantorLevel level;
    json params;
    std::string command;
    Rat tol(0);
    if (c_level->parsed()) {
      command = "level";
      Rat x = parse_rational(a.x);
      tol = parse_rational(a.tol);
      level = realize_level(x, a.j, a.depth, tol, opts);
      params = {{"x", format_rational(x)},
                {"j", a.j},
                {"depth", a.depth},
                {"tol", format_rational(tol)}};
    } else {
      command = "nm";
      tol = 0;  // exact endpoints
      level = build_nm(a.m, a.depth);
      params = {{"m", a.m}, {"depth", a.depth}};
    }
    int digits = tol == 0 ? 12 : digits_for_tol(tol) + 1;
    if (a.format == "csv") {
      std::string csv;
      level_rows(level, digits, nullptr, &csv);
      std::cout << csv;
      return 0;
    }
    json result;
    level_rows(level, digits, &result, nullptr);
    json precision = tol == 0 ? json{{"exact", true}}
                              : json{{"tol", format_rational(tol)}};
    return emit(command, params, result, precision, start);
  }

  if (c_thick->parsed()) {
    Rat x = parse_rational(a.x), tol = parse_rational(a.tol);
    CantorLevel level = realize_level(x, a.j, a.depth, tol, opts);
    Scale scale = a.scale == "linear" ? Scale::Linear : Scale::Log;
    ThicknessReport rep = thickness(level, scale);
    int digits = digits_for_tol(tol) + 1;
    json result{{"tau_lo", rat_json(rep.tau.lo)},
                {"tau_hi", rat_json(rep.tau.hi)},
                {"tau_lo_decimal", to_decimal(rep.tau.lo, digits)},
                {"tau_hi_decimal", to_decimal(rep.tau.hi, digits)},
                {"argmin_word", level.word_of(rep.argmin_tail).str()},
                {"scale", a.scale},
                {"depth", rep.depth}};
    return emit("thickness",
                {{"x", format_rational(x)},
                 {"j", a.j},
                 {"depth", a.depth},
                 {"tol", format_rational(tol)},
                 {"scale", a.scale}},
                result, {{"tol", format_rational(tol)}}, start);
  }

  if (c_sum->parsed()) {
    Rat x = parse_rational(a.x), tol = parse_rational(a.tol);
    Rat lambda = parse_rational(a.lambda);
    CantorLevel level = realize_level(x, a.j, a.depth, tol, opts);
    std::vector<EnclosedInterval> cover = sum_cover(level, lambda, level);
    int digits = digits_for_tol(tol) + 1;
    json blocks = json::array();
    for (const auto& blk : cover)
      blocks.push_back(json{{"left", interval_json(blk.left, digits)},
                            {"right", interval_json(blk.right, digits)}});
    json result{{"lambda", format_rational(lambda)},
                {"block_count", cover.size()},
                {"blocks", std::move(blocks)}};
    return emit("sumcover",
                {{"x", format_rational(x)},
                 {"j", a.j},
                 {"depth", a.depth},
                 {"tol", format_rational(tol)},
                 {"lambda", format_rational(lambda)}},
                result, {{"tol", format_rational(tol)}}, start);
  }

  if (c_thr->parsed()) {
    Rat x = parse_rational(a.x);
    std::size_t j = find_threshold_j(x, a.jmax);
    CaseDecomposition dec = decompose(x);
    json result{{"j", j},
                {"run_bound", dec.run_bound(j)},
                {"m_offset", dec.m_offset()},
                {"stem", dec.stem(j).str()}};
    return emit("thresholdj", {{"x", format_rational(x)}, {"jmax", a.jmax}},
                result, {{"exact", true}}, start);
  }

  if (c_match->parsed()) {
    Rat alpha = parse_rational(a.alpha);
    MatchingVerdict v = detect_matching(alpha, a.budget);
    MatchingVerdict d = doubling_criterion(alpha, a.budget);
    std::size_t orbit_len = std::min<std::size_t>(a.budget + 1, 16);
    json orbit = json::array();
    for (const auto& [u, w] : matching_orbit(alpha, orbit_len))
      orbit.push_back(
          json{{"u", format_rational(u)}, {"v", format_rational(w)}});
    json result{{"verdict", matching_kind_name(v.kind)},
                {"step", v.step},
                {"cycle_length", v.cycle_length},
                {"doubling_verdict", matching_kind_name(d.kind)},
                {"doubling_step", d.step},
                {"budget", a.budget},
                {"orbit", std::move(orbit)}};
    return emit("match",
                {{"alpha", format_rational(alpha)}, {"budget", a.budget}},
                result, {{"budget", a.budget}}, start);
  }

  if (c_sweep->parsed()) {
    Rat from = parse_rational(a.from), to = parse_rational(a.to);
    if (a.count == 0)
      throw std::invalid_argument("match-sweep: --count must be >= 1");
    std::cout << "alpha,verdict,m_or_cycle\n";
    for (std::size_t i = 0; i < a.count; ++i) {
      Rat alpha = a.count == 1
                      ? from
                      : Rat(from + (to - from) * Rat(static_cast<long>(i)) /
                                       Rat(static_cast<long>(a.count - 1)));
      MatchingVerdict v = detect_matching(alpha, a.budget);
      std::string tail_field;
      if (v.matched()) tail_field = std::to_string(v.step);
      if (v.non_matching()) tail_field = std::to_string(v.cycle_length);
      std::cout << format_rational(alpha) << ","
                << matching_kind_name(v.kind) << "," << tail_field << "\n";
    }
    return 0;
  }

  if (c_comp->parsed()) {
    FiniteWord w = FiniteWord::parse(a.word);
    Rat tol = parse_rational(a.tol);
    ComponentRecord rec = component_for_word(w, guarded(tol), opts);
    json result{{"word", w.str()},
                {"q_left", enclosure_json(rec.q_left, tol)},
                {"q_right", enclosure_json(rec.q_right, tol)},
                {"q_kl", enclosure_json(rec.q_kl, tol)}};
    return emit("component",
                {{"word", w.str()}, {"tol", format_rational(tol)}}, result,
                {{"tol", format_rational(tol)}}, start);
  }

  if (c_prop->parsed()) {
    FiniteWord w = FiniteWord::parse(a.word);
    Rat tol = parse_rational(a.tol);
    Prop51Report rep = check_prop51(w, guarded(tol), opts);
    int digits = digits_for_tol(tol) + 1;
    json result{{"word", w.str()},
                {"q_left", enclosure_json(rep.q_left, tol)},
                {"q_right", enclosure_json(rep.q_right, tol)},
                {"q_kl", enclosure_json(rep.q_kl, tol)},
                {"sum_gap_ok", rep.sum_gap_ok},
                {"product_gap_ok", rep.product_gap_ok},
                {"right_gap", interval_json(rep.right_gap, digits)},
                {"left_gap", interval_json(rep.left_gap, digits)},
                {"right_ratio", interval_json(rep.right_ratio, digits)},
                {"left_ratio", interval_json(rep.left_ratio, digits)},
                {"tol_used", format_rational(rep.tol_used)}};
    return emit("prop51", {{"word", w.str()}, {"tol", format_rational(tol)}},
                result, {{"tol", format_rational(tol)}}, start);
  }

  if (c_kl->parsed()) {
    Rat tol = parse_rational(a.tol);
    BaseEnclosure e = komornik_loreti(guarded(tol), opts);
    return emit("klconstant", {{"tol", format_rational(tol)}},
                enclosure_json(e, tol), {{"tol", format_rational(tol)}},
                start);
  }

  if (c_ent->parsed()) {
    std::vector<FiniteWord> factors = subshift_factors(a.m, a.k);
    RatInterval h = entropy_estimate(factors, a.k);
    json result{{"run_bound", a.m},
                {"k", a.k},
                {"factor_count", factors.size()},
                {"lo", rat_json(h.lo)},
                {"hi", rat_json(h.hi)},
                {"decimal", to_decimal(h.mid(), 12)}};
    return emit("entropy", {{"m", a.m}, {"k", a.k}}, result,
                {{"exact", h.lo == h.hi}}, start);
  }

  std::cerr << "no subcommand selected\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const ThresholdNotFoundError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
