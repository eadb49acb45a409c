// spreadlab: spreadness, homogeneity, approximation, sunflower and extremal
// oracles for set and permutation families. One subcommand per operation;
// reports are canonical JSON (sorted keys, exact rationals as num/den).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spreadlab/approx.hpp"
#include "spreadlab/family.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/oracle.hpp"
#include "spreadlab/perm.hpp"
#include "spreadlab/prob.hpp"
#include "spreadlab/spread.hpp"

using namespace spreadlab;

namespace {

constexpr const char* kVersion = "spreadlab 0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct Output {
  json results;
  json verdicts;  // null when the command has no contract to check
  bool violated = false;
};

json verdict_json(const PropertyVerdict& v) {
  json j;
  j["status"] = v.status == VerdictStatus::pass ? "pass"
                : v.status == VerdictStatus::fail ? "fail"
                                                  : "not_applicable";
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.witness) j["witness"] = bitset_to_json(*v.witness);
  return j;
}

json chain_verdict_json(const ChainPropertyVerdict& v) {
  json j;
  j["status"] = v.ok ? "pass" : "fail";
  if (v.failing_level >= 0) j["failing_level"] = v.failing_level;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

json extremal_json(const ExtremalResult& r, bool as_perms) {
  json j;
  j["optimum"] = r.optimum;
  j["proved_optimal"] = r.proved_optimal;
  j["nodes_explored"] = r.nodes_explored;
  j["witness"] = family_to_json(r.witness);
  if (as_perms && !r.witness.empty())
    j["witness_perms"] = perm_family_to_json(grid_family_to_perms(r.witness))["perms"];
  return j;
}

int resolve_threads(int cli_threads) {
  if (const char* env = std::getenv("SPREADLAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return cli_threads;
}

void emit_report(const std::string& command, const json& config, const Output& out,
                 const std::string& out_path) {
  json report;
  report["command"] = command;
  report["config"] = config;
  report["results"] = out.results;
  if (!out.verdicts.is_null()) report["verdicts"] = out.verdicts;
  report["version"] = kVersion;
  auto now = std::chrono::steady_clock::now().time_since_epoch();
  static const auto start = now;
  report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now - start).count();
  std::string text = canonical_dump(report);
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

// ---------------------------------------------------------------- generate

SetFamily generate_product(int n, int k, int w) {
  SetFamily block = full_ambient(n, k);
  std::vector<Bitset> members = {Bitset(n * w)};
  for (int b = 0; b < w; ++b) {
    std::vector<Bitset> next;
    for (const Bitset& prefix : members)
      for (const Bitset& choice : block.members()) {
        Bitset m = prefix;
        choice.for_each_bit([&](int e) { m.set(b * n + e); });
        next.push_back(m);
      }
    members = std::move(next);
  }
  return SetFamily(GroundSet(n * w), members);
}

SetFamily generate_fano() {
  return make_family(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                         {2, 4, 5}});
}

double generated_size(const std::string& kind, int n, int k, int w) {
  if (kind == "ksets") return binomial(n, k).convert_to<double>();
  if (kind == "perms") return factorial(n).convert_to<double>();
  if (kind == "product") return std::pow(binomial(n, k).convert_to<double>(), w);
  if (kind == "cube") return std::pow(double(n), k);
  return 7;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - spread approximations toolkit for set and permutation families"};
  app.require_subcommand(1);
  app.fallthrough();

  // shared knobs
  std::string out_path;
  int cli_threads = 1;
  app.add_option("--out", out_path, "write the report to this path instead of stdout");
  app.add_option("--threads", cli_threads, "worker threads for Monte-Carlo trials")
      ->check(CLI::PositiveNumber);

  // generate
  auto* gen = app.add_subcommand("generate", "write an ambient family file");
  std::string gen_kind, gen_path = "family.json";
  int gen_n = 0, gen_k = 0, gen_w = 1;
  bool gen_force = false;
  gen->add_option("--kind", gen_kind, "ksets | perms | product | cube | fano")->required();
  gen->add_option("--n", gen_n, "ground parameter n");
  gen->add_option("--k", gen_k, "subset size k");
  gen->add_option("--w", gen_w, "number of product blocks");
  gen->add_option("--file", gen_path, "output family path")->capture_default_str();
  gen->add_flag("--force", gen_force, "allow families above 10^6 members");

  // spread
  auto* spread_cmd = app.add_subcommand("spread", "exact spread radius of a family");
  std::string spread_family;
  int spread_cap = -1;
  spread_cmd->add_option("--family", spread_family)->required();
  spread_cmd->add_option("--cap", spread_cap, "largest |X| scanned (default: max member size)");

  // homog
  auto* homog = app.add_subcommand("homog", "tau-homogeneity (absolute or relative)");
  std::string homog_family, homog_ambient;
  double homog_tau = 0;
  homog->add_option("--family", homog_family)->required();
  homog->add_option("--tau", homog_tau)->required();
  homog->add_option("--ambient", homog_ambient, "check relative to this family");

  // rq-spread
  auto* rq = app.add_subcommand("rq-spread", "(r,q)-spreadness of a family");
  std::string rq_family;
  double rq_r = 0;
  int rq_q = 0;
  rq->add_option("--family", rq_family)->required();
  rq->add_option("--r", rq_r)->required();
  rq->add_option("--q", rq_q)->required();

  // regularity
  auto* reg = app.add_subcommand("regularity", "(t,q,eps,theta)-regularity check");
  std::string reg_family;
  int reg_t = 0, reg_q = 0;
  double reg_eps = 0, reg_theta = 0;
  unsigned long long reg_budget = 200'000'000ull;
  reg->add_option("--family", reg_family)->required();
  reg->add_option("--t", reg_t)->required();
  reg->add_option("--q", reg_q)->required();
  reg->add_option("--eps", reg_eps)->required();
  reg->add_option("--theta", reg_theta)->required();
  reg->add_option("--budget", reg_budget, "work-unit budget")->capture_default_str();

  // approx run
  auto* approx = app.add_subcommand("approx", "spread approximation procedure");
  auto* approx_run = approx->add_subcommand("run", "run the peeling procedure and verify");
  std::string ap_ambient, ap_family;
  double ap_tau = 0;
  int ap_q = 0, ap_t = -1;
  approx_run->add_option("--ambient", ap_ambient)->required();
  approx_run->add_option("--family", ap_family)->required();
  approx_run->add_option("--tau", ap_tau)->required();
  approx_run->add_option("--q", ap_q)->required();
  approx_run->add_option("--t", ap_t, "also check the selection for t-intersection");
  approx->require_subcommand(1);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "minimal reduction of a t-intersecting family");
  std::string red_family;
  int red_t = 0;
  reduce->add_option("--family", red_family)->required();
  reduce->add_option("--t", red_t)->required();

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "reduction chain with property certificates");
  std::string ch_family, ch_ambient;
  int ch_t = 0, ch_q = 0;
  double ch_r = 0;
  chain_cmd->add_option("--family", ch_family)->required();
  chain_cmd->add_option("--ambient", ch_ambient)->required();
  chain_cmd->add_option("--t", ch_t)->required();
  chain_cmd->add_option("--q", ch_q)->required();
  chain_cmd->add_option("--r", ch_r, "spreadness parameter for the collapse bound")->required();

  // sunflower
  auto* sun = app.add_subcommand("sunflower", "sunflower detection and thresholds");
  auto* sun_find = sun->add_subcommand("find", "exact sunflower search");
  std::string sun_family;
  int sun_petals = 0;
  unsigned long long sun_budget = 50'000'000ull;
  sun_find->add_option("--family", sun_family)->required();
  sun_find->add_option("--petals", sun_petals)->required();
  sun_find->add_option("--budget", sun_budget)->capture_default_str();
  auto* sun_thr = sun->add_subcommand("thresholds", "Erdos-Rado and ALWZ thresholds");
  int thr_k = 0, thr_l = 0;
  sun_thr->add_option("--k", thr_k)->required();
  sun_thr->add_option("--l", thr_l)->required();
  sun->require_subcommand(1);

  // mc
  auto* mc = app.add_subcommand("mc", "seeded Monte-Carlo experiments");
  auto* mc_lemma = mc->add_subcommand("spread-lemma", "audit the containment lower bound");
  std::string mcl_family;
  int mcl_m = 0;
  double mcl_delta = 0;
  uint64_t mcl_trials = 100000, mc_seed = 0;
  mc_lemma->add_option("--family", mcl_family)->required();
  mc_lemma->add_option("--m", mcl_m)->required();
  mc_lemma->add_option("--delta", mcl_delta)->required();
  mc_lemma->add_option("--trials", mcl_trials)->capture_default_str();
  mc_lemma->add_option("--seed", mc_seed)->required();
  auto* mc_cont = mc->add_subcommand("containment", "estimate Pr[some member inside W_p]");
  std::string mcc_family;
  double mcc_p = 0;
  uint64_t mcc_trials = 100000;
  mc_cont->add_option("--family", mcc_family)->required();
  mc_cont->add_option("--p", mcc_p)->required();
  mc_cont->add_option("--trials", mcc_trials)->capture_default_str();
  mc_cont->add_option("--seed", mc_seed)->required();
  auto* mc_sample = mc->add_subcommand("sample", "draw one p-random subset");
  int mcs_n = 0;
  double mcs_p = 0;
  mc_sample->add_option("--n", mcs_n)->required();
  mc_sample->add_option("--p", mcs_p)->required();
  mc_sample->add_option("--seed", mc_seed)->required();
  mc->require_subcommand(1);

  // pair-color
  auto* pc = app.add_subcommand("pair-color", "random 2-coloring disjoint-pair search");
  std::string pc_g1, pc_g2;
  uint64_t pc_trials = 1000, pc_seed = 0;
  pc->add_option("--g1", pc_g1)->required();
  pc->add_option("--g2", pc_g2)->required();
  pc->add_option("--trials", pc_trials)->capture_default_str();
  pc->add_option("--seed", pc_seed)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact extremal oracles");
  std::string or_ambient = "sets", or_ambient_file;
  int or_n = 0, or_k = 0, or_t = 1, or_m = 0;
  unsigned long long or_budget = kDefaultSearchBudget;
  std::string or_family, or_pi;
  auto add_ambient_opts = [&](CLI::App* cmd) {
    cmd->add_option("--ambient", or_ambient, "sets | perms | file")->capture_default_str();
    cmd->add_option("--ambient-file", or_ambient_file);
    cmd->add_option("--n", or_n);
    cmd->add_option("--k", or_k);
    cmd->add_option("--t", or_t)->capture_default_str();
    cmd->add_option("--budget", or_budget)->capture_default_str();
  };
  auto* or_maxint = oracle->add_subcommand("max-intersecting", "largest t-intersecting subfamily");
  add_ambient_opts(or_maxint);
  auto* or_maxavoid =
      oracle->add_subcommand("max-avoiding", "largest subfamily avoiding intersection t-1");
  add_ambient_opts(or_maxavoid);
  auto* or_trivial = oracle->add_subcommand("trivial", "triviality of a t-intersecting family");
  or_trivial->add_option("--family", or_family)->required();
  or_trivial->add_option("--t", or_t)->required();
  auto* or_hm = oracle->add_subcommand("hilton-milner", "Hilton-Milner type permutation family");
  or_hm->add_option("--n", or_n)->required();
  or_hm->add_option("--t", or_t)->required();
  auto* or_der = oracle->add_subcommand("derangements", "exact derangement count");
  or_der->add_option("--m", or_m)->required();
  auto* or_rf = oracle->add_subcommand("regular-feasibility", "degree-argument feasibility");
  or_rf->add_option("--n", or_n)->required();
  or_rf->add_option("--k", or_k)->required();
  auto* or_mr =
      oracle->add_subcommand("max-regular", "largest regular intersecting k-subset family");
  or_mr->add_option("--n", or_n)->required();
  or_mr->add_option("--k", or_k)->required();
  or_mr->add_option("--budget", or_budget)->capture_default_str();
  oracle->require_subcommand(1);

  // perm-classes
  auto* pcl = app.add_subcommand("perm-classes", "intersection class counts against Id_[t]");
  int pcl_n = 0, pcl_t = 0;
  std::string pcl_pi;
  pcl->add_option("--n", pcl_n)->required();
  pcl->add_option("--t", pcl_t)->required();
  pcl->add_option("--pi", pcl_pi, "one-line permutation, e.g. 2,1,3,4")->required();

  CLI11_PARSE(app, argc, argv);
  int threads = resolve_threads(cli_threads);

  try {
    Output out;
    std::string command;
    json config;

    if (gen->parsed()) {
      command = "generate";
      config = {{"kind", gen_kind}, {"n", gen_n}, {"k", gen_k}, {"w", gen_w}, {"file", gen_path}};
      if (gen_kind != "fano" && gen_n < 1) throw std::invalid_argument("generate: need --n >= 1");
      if (!gen_force && generated_size(gen_kind, gen_n, gen_k, gen_w) > 1e6)
        throw std::invalid_argument("generate: more than 10^6 members; pass --force to allow");
      if (gen_kind == "ksets") {
        save_family(full_ambient(gen_n, gen_k), gen_path);
      } else if (gen_kind == "perms") {
        save_perm_family(all_permutations(gen_n), gen_path);
      } else if (gen_kind == "product") {
        save_family(generate_product(gen_n, gen_k, gen_w), gen_path);
      } else if (gen_kind == "cube") {
        save_family(generate_product(gen_n, 1, gen_k), gen_path);
      } else if (gen_kind == "fano") {
        save_family(generate_fano(), gen_path);
      } else {
        throw std::invalid_argument("generate: unknown kind '" + gen_kind + "'");
      }
      out.results["written"] = gen_path;
    } else if (spread_cmd->parsed()) {
      command = "spread";
      config = {{"family", spread_family}, {"cap", spread_cap}};
      SetFamily F = load_family_any(spread_family);
      SpreadReport r = spread_radius(F, spread_cap);
      out.results["radius"] = rooted_ratio_to_json(r.radius);
      out.results["witness"] = bitset_to_json(r.witness);
      out.results["complete"] = r.complete;
      json per;
      for (const auto& [size, v] : r.per_size_min)
        per[std::to_string(size)] = rooted_ratio_to_json(v);
      out.results["per_size_min"] = per;
    } else if (homog->parsed()) {
      command = "homog";
      config = {{"family", homog_family}, {"tau", homog_tau}, {"ambient", homog_ambient}};
      SetFamily F = load_family_any(homog_family);
      HomogReport r = homog_ambient.empty()
                          ? is_tau_homogeneous(F, homog_tau)
                          : is_rel_homogeneous(F, load_family_any(homog_ambient), homog_tau);
      out.verdicts["homogeneous"] = r.ok ? "pass" : "fail";
      if (r.witness) out.results["witness"] = bitset_to_json(*r.witness);
      out.violated = !r.ok;
    } else if (rq->parsed()) {
      command = "rq-spread";
      config = {{"family", rq_family}, {"r", rq_r}, {"q", rq_q}};
      SetFamily F = load_family_any(rq_family);
      RqSpreadReport r = is_rq_spread(F, rq_r, rq_q);
      out.verdicts["rq_spread"] = r.ok ? "pass" : "fail";
      if (r.failing_S) out.results["failing_S"] = bitset_to_json(*r.failing_S);
      if (r.failing_X) out.results["failing_X"] = bitset_to_json(*r.failing_X);
      out.violated = !r.ok;
    } else if (reg->parsed()) {
      command = "regularity";
      config = {{"family", reg_family}, {"t", reg_t},         {"q", reg_q},
                {"eps", reg_eps},       {"theta", reg_theta}, {"budget", reg_budget}};
      SetFamily F = load_family_any(reg_family);
      RegularityReport r = regularity_check(F, reg_t, reg_q, reg_eps, reg_theta, reg_budget);
      out.results["complete"] = r.complete;
      out.results["work_used"] = r.work_used;
      out.results["measured_epsilon"] = r.measured_epsilon;
      out.results["measured_theta"] = r.measured_theta;
      out.results["expected_set_size"] = r.expected_set_size;
      if (r.failing_S) {
        out.results["failing_S"] = bitset_to_json(*r.failing_S);
        out.results["failing_l"] = r.failing_l;
        out.results["failing_condition"] =
            r.failing_condition == RegularityFailure::shadow_deficit ? "shadow_deficit"
                                                                     : "concentration";
      }
      out.verdicts["regular"] = !r.complete ? "incomplete" : r.ok ? "pass" : "fail";
      out.violated = r.complete && !r.ok;
    } else if (approx_run->parsed()) {
      command = "approx run";
      config = {{"ambient", ap_ambient},
                {"family", ap_family},
                {"tau", ap_tau},
                {"q", ap_q},
                {"t", ap_t}};
      SetFamily A = load_family_any(ap_ambient);
      SetFamily F = load_family_any(ap_family);
      ApproxResult res = spread_approximate(A, F, ap_tau, ap_q);

      json sel = json::array();
      for (const Bitset& s : res.selected) sel.push_back(bitset_to_json(s));
      out.results["selected"] = sel;
      out.results["remainder"] = family_to_json(res.remainder);
      out.results["stop"] = res.stop == ApproxStop::family_exhausted ? "family_exhausted"
                            : res.stop == ApproxStop::oversize_selector ? "oversize_selector"
                                                                        : "empty_selector";
      if (res.stopping_selector)
        out.results["stopping_selector"] = bitset_to_json(*res.stopping_selector);
      // pieces as member indices into the canonical order of F
      json pieces = json::array();
      for (const SetFamily& piece : res.pieces) {
        json idx = json::array();
        for (size_t i = 0; i < F.size(); ++i)
          if (piece.contains(F[i])) idx.push_back(i);
        pieces.push_back(idx);
      }
      out.results["pieces"] = pieces;
      json trace = json::array();
      for (const ApproxTraceStep& st : res.trace) {
        json tj;
        tj["step"] = st.step;
        tj["family_size"] = st.family_size;
        tj["selected"] = bitset_to_json(st.selected);
        tj["threshold"] = rational_to_json(st.threshold_num, st.threshold_den);
        tj["link_count"] = st.link_count;
        trace.push_back(tj);
      }
      out.results["trace"] = trace;

      ApproxVerifyReport v = verify_approximation(res, A, F, ap_tau, ap_q);
      out.verdicts["coverage"] = verdict_json(v.coverage);
      out.verdicts["homogeneity"] = verdict_json(v.homogeneity);
      out.verdicts["remainder_bound"] = verdict_json(v.remainder_bound);
      out.violated = !v.all_ok();
      if (ap_t >= 0) {
        PairCheck tc = check_S_t_intersecting(res, ap_t);
        out.verdicts["selection_t_intersecting"] = tc.ok ? "pass" : "fail";
        if (tc.violating_pair) {
          out.results["violating_pair"] = {bitset_to_json(tc.violating_pair->first),
                                           bitset_to_json(tc.violating_pair->second)};
        }
        out.violated = out.violated || !tc.ok;
      }
    } else if (reduce->parsed()) {
      command = "reduce";
      config = {{"family", red_family}, {"t", red_t}};
      SetFamily S = load_family_any(red_family);
      SetFamily T = reduce_to_minimal(S, red_t);
      out.results["reduced"] = family_to_json(T);
      out.verdicts["t_intersecting"] = is_t_intersecting(T, red_t) ? "pass" : "fail";
      out.verdicts["minimal"] = has_minimal_reduction_property(T, red_t) ? "pass" : "fail";
      out.violated = out.verdicts["t_intersecting"] != "pass" || out.verdicts["minimal"] != "pass";
    } else if (chain_cmd->parsed()) {
      command = "chain";
      config = {{"family", ch_family},
                {"ambient", ch_ambient},
                {"t", ch_t},
                {"q", ch_q},
                {"r", ch_r}};
      SetFamily S = load_family_any(ch_family);
      SetFamily A = load_family_any(ch_ambient);
      ReductionChain chain = build_chain(S, A, ch_t, ch_q);
      json levels = json::array();
      for (const auto& [T, W] : chain.levels)
        levels.push_back({{"T", family_to_json(T)}, {"W", family_to_json(W)}});
      out.results["levels"] = levels;
      out.results["final_T"] = family_to_json(chain.final_t);
      ChainReport rep = check_chain_properties(chain, A, ch_r);
      out.verdicts["sizes"] = chain_verdict_json(rep.sizes);
      out.verdicts["link_coverage"] = chain_verdict_json(rep.link_coverage);
      out.verdicts["sunflower_free"] = chain_verdict_json(rep.sunflower_free);
      out.verdicts["w_cardinality"] = chain_verdict_json(rep.w_cardinality);
      out.verdicts["collapse_bound"] = chain_verdict_json(rep.collapse_bound);
      out.violated = !rep.all_ok();
    } else if (sun_find->parsed()) {
      command = "sunflower find";
      config = {{"family", sun_family}, {"petals", sun_petals}, {"budget", sun_budget}};
      SetFamily F = load_family_any(sun_family);
      SunflowerSearch s = find_sunflower(F, sun_petals, sun_budget);
      out.results["status"] = s.status == SunflowerStatus::found ? "found"
                              : s.status == SunflowerStatus::none ? "none"
                                                                  : "budget_exceeded";
      out.results["work_used"] = s.work_used;
      if (s.sunflower) {
        out.results["core"] = bitset_to_json(s.sunflower->core);
        out.results["petals"] = s.sunflower->petals;
        out.results["verified"] = verify_sunflower(F, *s.sunflower);
      }
    } else if (sun_thr->parsed()) {
      command = "sunflower thresholds";
      config = {{"k", thr_k}, {"l", thr_l}};
      SunflowerThresholds t = sunflower_thresholds(thr_k, thr_l);
      out.results["erdos_rado"] = t.erdos_rado.str();
      out.results["alwz"] = t.alwz;
    } else if (mc_lemma->parsed()) {
      command = "mc spread-lemma";
      config = {{"family", mcl_family}, {"m", mcl_m},       {"delta", mcl_delta},
                {"trials", mcl_trials}, {"seed", mc_seed},  {"threads", threads}};
      SetFamily F = load_family_any(mcl_family);
      SpreadLemmaAudit a = spread_lemma_audit(F, mcl_m, mcl_delta, mcl_trials,
                                              RngSpec{mc_seed}, threads);
      out.results["radius"] = rooted_ratio_to_json(a.radius_exact);
      out.results["mu"] = a.mu;
      out.results["p"] = a.p;
      out.results["bound"] = a.bound;
      out.results["bound_vacuous"] = a.bound_vacuous;
      out.results["estimate"] = a.mc.estimate;
      out.results["stderr"] = a.mc.stderr_;
      out.results["successes"] = a.mc.successes;
      out.verdicts["spread_lemma"] = a.verdict == AuditVerdict::pass ? "pass"
                                     : a.verdict == AuditVerdict::fail ? "fail"
                                                                       : "vacuous";
      out.violated = a.verdict == AuditVerdict::fail;
    } else if (mc_cont->parsed()) {
      command = "mc containment";
      config = {{"family", mcc_family},
                {"p", mcc_p},
                {"trials", mcc_trials},
                {"seed", mc_seed},
                {"threads", threads}};
      SetFamily F = load_family_any(mcc_family);
      McEstimate e = containment_probability(F, mcc_p, mcc_trials, RngSpec{mc_seed}, threads);
      out.results["estimate"] = e.estimate;
      out.results["stderr"] = e.stderr_;
      out.results["successes"] = e.successes;
      out.results["trials"] = e.trials;
    } else if (mc_sample->parsed()) {
      command = "mc sample";
      config = {{"n", mcs_n}, {"p", mcs_p}, {"seed", mc_seed}};
      Rng rng = Rng::from_spec(RngSpec{mc_seed});
      out.results["subset"] = bitset_to_json(sample_p_random(mcs_n, mcs_p, rng));
    } else if (pc->parsed()) {
      command = "pair-color";
      config = {{"g1", pc_g1}, {"g2", pc_g2}, {"trials", pc_trials}, {"seed", pc_seed}};
      SetFamily G1 = load_family_any(pc_g1);
      SetFamily G2 = load_family_any(pc_g2);
      auto pair = find_disjoint_pair_by_coloring(G1, G2, pc_trials, RngSpec{pc_seed});
      out.results["found"] = pair.has_value();
      if (pair) {
        out.results["set1"] = bitset_to_json(pair->set1);
        out.results["set2"] = bitset_to_json(pair->set2);
        out.results["index1"] = pair->index1;
        out.results["index2"] = pair->index2;
        out.results["trial"] = pair->trial;
        out.results["certified_disjoint"] = pair->set1.disjoint_from(pair->set2);
      }
    } else if (or_maxint->parsed() || or_maxavoid->parsed()) {
      bool avoiding = or_maxavoid->parsed();
      command = avoiding ? "oracle max-avoiding" : "oracle max-intersecting";
      config = {{"ambient", or_ambient}, {"n", or_n},           {"k", or_k},
                {"t", or_t},             {"budget", or_budget}, {"ambient_file", or_ambient_file}};
      SetFamily A = [&] {
        if (or_ambient == "sets") return full_ambient(or_n, or_k);
        if (or_ambient == "perms") return to_grid_family(all_permutations(or_n));
        if (or_ambient == "file") return load_family_any(or_ambient_file);
        throw std::invalid_argument("oracle: --ambient must be sets, perms or file");
      }();
      ExtremalResult r =
          avoiding ? max_avoiding(A, or_t, or_budget) : max_t_intersecting(A, or_t, or_budget);
      out.results = extremal_json(r, or_ambient == "perms");
    } else if (or_trivial->parsed()) {
      command = "oracle trivial";
      config = {{"family", or_family}, {"t", or_t}};
      SetFamily F = load_family_any(or_family);
      auto T = is_trivial_t_intersecting(F, or_t);
      out.results["trivial"] = T.has_value();
      if (T) out.results["core"] = bitset_to_json(*T);
    } else if (or_hm->parsed()) {
      command = "oracle hilton-milner";
      config = {{"n", or_n}, {"t", or_t}};
      HiltonMilnerFamily hm = hilton_milner_perm_family(or_n, or_t);
      out.results["family"] = perm_family_to_json(hm.family);
      json sig = json::array();
      for (int v : hm.sigma) sig.push_back(v + 1);
      out.results["sigma"] = sig;
      SetFamily grid = to_grid_family(hm.family);
      out.verdicts["avoids_intersection"] =
          avoids_intersection(grid, or_t - 1) ? "pass" : "fail";
      out.results["nontrivial"] = common_intersection(grid).count() < or_t;
      out.violated = out.verdicts["avoids_intersection"] != "pass";
    } else if (or_der->parsed()) {
      command = "oracle derangements";
      config = {{"m", or_m}};
      out.results["count"] = derangement_count(or_m).str();
    } else if (or_rf->parsed()) {
      command = "oracle regular-feasibility";
      config = {{"n", or_n}, {"k", or_k}};
      out.results["verdict"] =
          regular_feasibility(or_n, or_k) == RegularFeasibility::infeasible ? "infeasible"
                                                                            : "unknown";
    } else if (or_mr->parsed()) {
      command = "oracle max-regular";
      config = {{"n", or_n}, {"k", or_k}, {"budget", or_budget}};
      ExtremalResult r = max_regular_intersecting(or_n, or_k, or_budget);
      out.results = extremal_json(r, false);
    } else if (pcl->parsed()) {
      command = "perm-classes";
      config = {{"n", pcl_n}, {"t", pcl_t}, {"pi", pcl_pi}};
      std::vector<int> pi;
      {
        std::stringstream ss(pcl_pi);
        std::string item;
        while (std::getline(ss, item, ',')) pi.push_back(std::stoi(item) - 1);
      }
      IntersectionClassCounts c = count_intersection_classes(pcl_n, pcl_t, pi);
      json counts;
      for (auto [i, v] : c.counts) counts[std::to_string(i)] = v;
      out.results["counts"] = counts;
      out.results["total"] = c.total.str();
      out.results["class_t_minus_1"] = c.class_t_minus_1;
      out.verdicts["lower_bound"] = c.bound_ok ? "pass" : "fail";
      out.violated = !c.bound_ok;
    }

    emit_report(command, config, out, out_path);
    return out.violated ? kExitViolation : kExitOk;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    err["version"] = kVersion;
    std::cerr << canonical_dump(err);
    return kExitError;
  }
}
