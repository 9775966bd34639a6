#pragma once

// Job specifications, task dispatch and report assembly for the command line
// tool. A report embeds the effective spec, so rerunning it reproduces the
// report byte for byte.

#include "hereditas/io.hpp"
#include "hereditas/torsionlab.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace hereditas::jobs {

using io::json;

/// Exit codes.
enum : int { ok = 0, counterexample = 1, bad_input = 2, inconsistent = 3 };

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> bound;
  std::size_t jobs = 1;
};

struct Outcome {
  json report;
  int exit_code = ok;
};

inline const char* report_format = "hereditas-report/1";

// ---------------------------------------------------------------------------
// Certificates

inline json one_coords(const Ring& r) {
  json j = json::array();
  for (const Int& x : r.one()) j.push_back(x.str());
  return j;
}

inline json certificate(const std::string& kind, const Ring& r, json fields) {
  fields["kind"] = kind;
  fields["ring"] = io::ring_to_json(r);
  fields["one"] = one_coords(r);
  return fields;
}

inline json refutation_json(const Refutation& ref, const Ring& r) {
  json eqs = json::array();
  for (const auto& e : ref.system)
    eqs.push_back({{"left", io::mat_to_json(e.left)}, {"right", io::mat_to_json(e.right)},
                   {"target", io::mat_to_json(e.target)}});
  return certificate("refutation", r,
                     {{"description", ref.description}, {"unknown", {ref.unknown_rows, ref.unknown_cols}}, {"equations", eqs}});
}

/// A U A = A has no solution for A = the given relations.
inline json projectivity_refutation(const Mat& a) {
  LinearSystem sys(a.ring(), a.cols(), a.rows());
  sys.add(a, a, a);
  return refutation_json(make_refutation(sys, "A U A = A"), a.ring());
}

inline json chain_maps(const PseudoCokChain& c) {
  json maps = json::array();
  for (std::size_t i = 0; i <= c.length(); ++i) maps.push_back(io::mat_to_json(c.at(i)));
  return maps;
}

inline json morphism_json(const ModMorphism& f) {
  return {{"gen_matrix", io::mat_to_json(f.gen_matrix)},
          {"certificate", certificate("morphism", f.source.acting_ring(),
                                      {{"source_relations", io::mat_to_json(f.source.relations())},
                                       {"gen_matrix", io::mat_to_json(f.gen_matrix)},
                                       {"rel_witness", io::mat_to_json(f.rel_witness)},
                                       {"target_relations", io::mat_to_json(f.target.relations())}})}};
}

inline json hereditary_json(const HereditaryCertificate& c) {
  const Ring& r = c.a.ring();
  json j = {{"A", io::mat_to_json(c.a)}, {"B", io::mat_to_json(c.b)}, {"n", c.n},
            {"status", c.success ? "success" : "refutation"}};
  if (c.chain) {
    json maps = chain_maps(*c.chain);
    j["chain"] = {{"maps", maps}, {"certificate", certificate("chain", r, {{"maps", maps}})}};
    if (c.alpha) {
      json fields = {{"maps", maps}, {"alpha", io::mat_to_json(*c.alpha)}};
      if (c.c && c.h) {
        fields["C"] = io::mat_to_json(*c.c);
        fields["h"] = io::mat_to_json(*c.h);
      }
      j["alpha"] = io::mat_to_json(*c.alpha);
      j["certificate"] = certificate("n-hereditary", r, fields);
    }
    if (c.n == 1) j["routes_agree"] = c.cross_checked;
  } else if (c.c) {
    j["certificate"] = certificate("semi-hereditary", r,
                                   {{"A", io::mat_to_json(c.a)}, {"B", io::mat_to_json(c.b)}, {"C", io::mat_to_json(*c.c)}});
  }
  j["C"] = io::optional_mat(c.c);
  if (c.h) j["h"] = io::mat_to_json(*c.h);
  if (c.refutation) j["refutation"] = {{"certificate", refutation_json(*c.refutation, r)}};
  return j;
}

inline json membership_json(const MembershipVerdict& v) {
  json j = {{"module", io::module_to_json(v.module)}, {"class", to_string(v.cls)}, {"n", v.n},
            {"verdict", to_string(v.verdict)}, {"test_set", v.bound}, {"tested", v.tested}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.witness) j["witness"] = {{"test_module", io::module_to_json(v.witness->test)}, {"value", io::group_to_json(v.witness->value)}};
  return j;
}

inline std::string verdict_status(bool pass) { return pass ? "verified" : "counterexample"; }

inline json hereditary_report_json(const HereditaryReport& r) {
  json j = {{"n", r.n}, {"bound", r.bound.str()}, {"mode", r.exhaustive ? "exhaustive" : "sampled"},
            {"tested", r.tested}, {"status", verdict_status(r.verified())}};
  if (r.verified()) {
    j["claim"] = std::string(r.exhaustive ? "every" : "all " + std::to_string(r.tested) + " sampled") +
                 " matrix within the bound has a certificate";
  } else {
    j["counterexample_index"] = *r.counterexample_index;
    j["counterexample"] = hereditary_json(*r.counterexample);
  }
  return j;
}

inline json closure_json(const ClosureReport& r) {
  json j = {{"class", to_string(r.cls)}, {"n", r.n}, {"property", to_string(r.property)}, {"trials", r.trials},
            {"tested", r.tested}, {"members", r.members}, {"test_set", r.bound},
            {"status", r.passed() ? "pass" : "counterexample"}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    json in = json::array();
    for (const auto& m : c.inputs) in.push_back(io::module_to_json(m));
    j["counterexample"] = {{"inputs", in}, {"data", io::mat_to_json(c.data)}, {"result", io::module_to_json(c.result)},
                           {"witness", {{"test_module", io::module_to_json(c.witness.test)}, {"value", io::group_to_json(c.witness.value)}}},
                           {"reverified", r.verify()}};
  }
  return j;
}

inline json pd_search_json(const PdSearchReport& r) {
  json j = {{"n", r.n}, {"test_set", r.bound}, {"tested", r.tested}, {"status", verdict_status(r.verified())}};
  if (r.counterexample) {
    j["counterexample"] = {{"module", io::module_to_json(*r.counterexample)},
                           {"syzygy", io::module_to_json(r.certificate->syzygy)},
                           {"certificate", projectivity_refutation(r.certificate->syzygy.relations())}};
  }
  return j;
}

inline json consistency_json(const ConsistencyReport& r) {
  const bool agree = r.agree();
  json j = {{"n", r.n}, {"bound", r.bound.str()},
            {"pd_search", pd_search_json(r.pd)},
            {"matrix_report", hereditary_report_json(r.matrices)},
            {"closure_quotients", closure_json(r.closure)},
            {"verdicts", {{"pd_le_1", r.pd_pass()}, {"matrices", r.matrices_pass()}, {"closure", r.closure_pass()}}},
            {"agree", agree}};
  if (agree && !r.pd_pass()) j["cross_referenced"] = r.cross_referenced();
  if (!agree) {
    j["status"] = "inconsistent";
    j["note"] = "verdicts disagree: implementation bug; rerun with this spec to reproduce";
  } else {
    j["status"] = r.pd_pass() ? "all-pass" : "all-fail";
  }
  return j;
}

// ---------------------------------------------------------------------------
// Job inputs

struct Job {
  json spec;  // effective spec of this job
  Ring ring;
  std::uint64_t seed = 0;
  std::size_t n = 1;
  std::size_t jobs = 1;
  std::string bound;

  const json& input(const std::string& key) const {
    if (spec.contains("inputs") && spec.at("inputs").contains(key)) return spec.at("inputs").at(key);
    if (spec.contains(key)) return spec.at(key);
    throw input_error("task '" + task() + "' needs input '" + key + "'");
  }

  bool has(const std::string& key) const {
    return (spec.contains("inputs") && spec.at("inputs").contains(key)) || spec.contains(key);
  }

  std::string task() const { return spec.at("task").get<std::string>(); }

  Mat mat(const std::string& key) const { return io::mat_from_json(ring, input(key)); }

  FpModule module(const std::string& key, Side side = Side::left) const {
    return io::module_from_json(ring, input(key), side);
  }

  std::vector<FpModule> modules(const std::string& key, Side side) const {
    std::vector<FpModule> out;
    const json& list = input(key);
    if (!list.is_array()) throw input_error("'" + key + "' must be a list of modules");
    for (const auto& m : list) out.push_back(io::module_from_json(ring, m, side));
    return out;
  }

  Bound parsed_bound(const std::string& fallback) const { return Bound::parse(bound.empty() ? fallback : bound); }

  std::size_t count(const std::string& key, std::size_t fallback) const {
    return has(key) ? io::size_from_json(input(key), key) : fallback;
  }

  ModuleClass cls() const {
    const std::string c = has("class") ? input("class").get<std::string>() : "I_n";
    if (c == "I_n" || c == "injective") return ModuleClass::injective;
    if (c == "F_n" || c == "flat") return ModuleClass::flat;
    throw input_error("class must be I_n or F_n, got '" + c + "'");
  }
};

inline std::uint64_t seed_from_json(const json& j) {
  const Int v = io::int_from_json(j, "seed");
  if (v < 0 || v > Int(std::numeric_limits<std::uint64_t>::max())) throw input_error("seed out of range");
  return static_cast<std::uint64_t>(v);
}

// ---------------------------------------------------------------------------
// Tasks

struct TaskResult {
  json body;
  int code = ok;
};

inline std::size_t idempotent_position(const Job& job, const json& sel) {
  const auto& idx = job.ring.idempotent_indices();
  if (sel.is_string()) {
    const std::size_t b = io::basis_index(job.ring.basis_names(), sel.get<std::string>());
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == b) return k;
    throw input_error("'" + sel.get<std::string>() + "' is not one of the listed idempotents");
  }
  const std::size_t k = io::size_from_json(sel, "idempotent");
  if (k >= idx.size()) throw input_error("idempotent position out of range");
  return k;
}

inline DualityPart parse_part(const std::string& s) {
  if (s == "i") return DualityPart::ext_tor;
  if (s == "ii") return DualityPart::tensor_hom;
  if (s == "iii") return DualityPart::tor_ext;
  throw input_error("duality part must be i, ii, iii or flat-injective, got '" + s + "'");
}

inline TaskResult run_task(const Job& job) {
  const std::string task = job.task();
  const Ring& r = job.ring;
  TaskResult out;
  json& b = out.body;

  if (task == "pseudo-cok") {
    const auto c = pseudo_n_cokernel(job.mat("A"), job.n);
    const json maps = chain_maps(c);
    b = {{"statement", "the rows of each f_{i+1} generate the left kernel of f_i"}, {"A", maps[0]}, {"n", job.n},
         {"maps", maps}, {"exact", c.verify()}, {"certificate", certificate("chain", r, {{"maps", maps}})},
         {"status", "success"}};
    if (!c.verify()) out.code = inconsistent;
  } else if (task == "semi-hereditary") {
    const auto c = semi_hereditary_witness(job.mat("A"));
    b = hereditary_json(c);
    b["statement"] = "C with B C = 0 and C A = A, for B generating the left kernel of A";
    out.code = c.success ? ok : counterexample;
  } else if (task == "n-hereditary") {
    const auto c = n_hereditary_witness(job.mat("A"), job.n);
    b = hereditary_json(c);
    b["statement"] = "alpha with f_n alpha = 0 and alpha f_{n-1} = f_{n-1} on the pseudo n-cokernel of A";
    out.code = !c.cross_checked ? inconsistent : c.success ? ok : counterexample;
  } else if (task == "split-cokernel") {
    const Mat g = job.mat("G");
    const auto p = split_cokernel_test(g);
    b = {{"statement", "P with G P = I"}, {"G", io::mat_to_json(g)}, {"P", io::optional_mat(p)}};
    if (p) {
      b["status"] = "success";
      b["certificate"] = certificate("split", r, {{"G", io::mat_to_json(g)}, {"P", io::mat_to_json(*p)}});
    } else {
      LinearSystem sys(r, g.cols(), g.rows());
      sys.add(g, Mat::identity(r, g.rows()), Mat::identity(r, g.rows()));
      b["status"] = "refutation";
      b["refutation"] = {{"certificate", refutation_json(make_refutation(sys, "G P = I"), r)}};
      out.code = counterexample;
    }
  } else if (task == "hereditary-report") {
    const auto rep = ring_hereditary_report(r, job.n, job.parsed_bound("2x2"), job.seed, job.jobs);
    b = hereditary_report_json(rep);
    b["statement"] = "every matrix within the bound has an n-hereditary certificate";
    out.code = rep.verified() ? ok : counterexample;
  } else if (task == "projectivity") {
    const FpModule m = job.module("M");
    const auto u = is_projective(m);
    const auto pd1 = pd_le_1(m);
    const auto pd = projective_dimension(m);
    b = {{"statement", "M is projective iff A U A = A is solvable for its relation matrix A"},
         {"module", io::module_to_json(m)}, {"projective", u.has_value()}, {"pd_le_1", pd1.holds},
         {"projective_dimension", pd.bounded ? json(pd.value) : json(">= " + std::to_string(pd.value))}};
    const Mat& a = m.relations();
    b["projectivity"] = u ? json{{"U", io::mat_to_json(*u)},
                                 {"certificate", certificate("projective", m.acting_ring(),
                                                             {{"A", io::mat_to_json(a)}, {"U", io::mat_to_json(*u)}})}}
                          : json{{"certificate", projectivity_refutation(a)}};
    const Mat& sa = pd1.syzygy.relations();
    b["first_syzygy"] = {{"module", io::module_to_json(pd1.syzygy)}};
    b["first_syzygy"]["certificate"] =
        pd1.splitting ? certificate("projective", pd1.syzygy.acting_ring(),
                                    {{"A", io::mat_to_json(sa)}, {"U", io::mat_to_json(*pd1.splitting)}})
                      : projectivity_refutation(sa);
    b["status"] = pd1.holds ? "pd <= 1" : "pd > 1";
  } else if (task == "ext") {
    const FpModule f = job.module("F"), n = job.module("N", f.side());
    b = {{"statement", "Ext^1(F, N) from a length-2 free presentation of F"}, {"F", io::module_to_json(f)},
         {"N", io::module_to_json(n)}, {"ext1", io::group_to_json(ext1(f, n))}, {"status", "computed"}};
  } else if (task == "tor") {
    const FpModule n = job.module("N", Side::right);
    const FpModule f = detail::side_for(job.module("F", opposite(n.side())), opposite(n.side()), "F");
    b = {{"statement", "Tor_1(N, F) from a length-2 free presentation of N"}, {"N", io::module_to_json(n)},
         {"F", io::module_to_json(f)}, {"tor1", io::group_to_json(tor1(n, f))},
         {"tensor0", io::group_to_json(tensor_product(n, f))}, {"status", "computed"}};
  } else if (task == "hom") {
    const FpModule m = job.module("M"), n = job.module("N", m.side());
    const auto h = hom_module(m, n);
    json gens = json::array();
    for (const auto& f : h.generators) gens.push_back(morphism_json(f));
    b = {{"statement", "Hom(M, N) as a kernel on underlying groups, with generating morphisms"},
         {"M", io::module_to_json(m)}, {"N", io::module_to_json(n)}, {"hom", io::group_to_json(h.group)},
         {"generators", gens}, {"status", "computed"}};
  } else if (task == "character") {
    const FpModule m = job.module("M");
    const auto c = character(m);
    const auto cc = character(c.dual);
    json orders = json::array();
    for (const Int& d : c.orders()) orders.push_back(d.str());
    const bool pairing = c.verify();
    const bool involution = underlying_structure(cc.dual) == underlying_structure(m);
    b = {{"statement", "M+ = Hom_Z(M, Q/Z) realized in Z/exponent, with (f a)(m) = f(a m)"},
         {"module", io::module_to_json(m)}, {"dual", io::module_to_json(c.dual)},
         {"source_group", io::group_to_json(underlying_structure(m))},
         {"dual_group", io::group_to_json(underlying_structure(c.dual))}, {"cyclic_orders", orders},
         {"exponent", c.exponent.str()}, {"pairing_verified", pairing}, {"double_dual_matches", involution},
         {"status", pairing && involution ? "verified" : "inconsistent"}};
    if (!pairing || !involution) out.code = inconsistent;
  } else if (task == "duality-check") {
    const std::string which = job.input("which").get<std::string>();
    if (which == "flat-injective") {
      const FpModule n = job.module("N", Side::right);
      std::vector<FpModule> tests;
      std::string desc;
      if (job.has("testset")) {
        tests = job.modules("testset", Side::left);
        desc = "explicit list of " + std::to_string(tests.size()) + " modules";
      } else {
        const Bound bd = job.parsed_bound("2x2");
        tests = module_test_set(r, Side::left, bd, job.seed);
        desc = test_set_description(r, bd, tests.size());
      }
      const auto rec = verify_flat_injective_duality(n, tests);
      json cases = json::array();
      for (const auto& c : rec.cases)
        cases.push_back({{"F", io::module_to_json(c.test)}, {"tor_vanishes", c.tor_vanishes},
                         {"ext_vanishes", c.ext_vanishes}, {"agrees", c.agrees()}});
      b = {{"statement", "Tor_1(N, F) = 0 iff Ext^1(F, N+) = 0"}, {"N", io::module_to_json(n)}, {"test_set", desc},
           {"cases", cases}, {"violations", rec.violations()},
           {"status", rec.violations() ? "inconsistent" : "verified"}};
      if (rec.violations()) out.code = inconsistent;
    } else {
      const DualityPart part = parse_part(which);
      const FpModule f = job.module("F", part == DualityPart::ext_tor ? Side::left : Side::right);
      const FpModule n = job.module("N", Side::right);
      const auto rec = verify_ext_tor_duality(f, n, part);
      static const std::map<std::string, std::string> statements = {
          {"i", "Ext^1(F, N+) = Hom_Z(Tor_1(N, F), Q/Z)"},
          {"ii", "F (x) N+ = Hom_Z(Hom(F, N), Q/Z)"},
          {"iii", "Tor_1(F, N+) = Hom_Z(Ext^1(F, N), Q/Z)"}};
      b = {{"statement", statements.at(which)}, {"which", which}, {"F", io::module_to_json(f)},
           {"N", io::module_to_json(n)}, {"lhs", io::group_to_json(rec.lhs)}, {"rhs", io::group_to_json(rec.rhs)},
           {"holds", rec.holds()}, {"status", rec.holds() ? "verified" : "inconsistent"}};
      if (!rec.holds()) out.code = inconsistent;
    }
  } else if (task == "membership") {
    const ModuleClass cls = job.cls();
    const FpModule m = job.module("M", cls == ModuleClass::injective ? Side::left : Side::right);
    MembershipVerdict v;
    if (job.has("testset")) {
      const auto tests = job.modules("testset", test_side(cls, m));
      v = membership(m, cls, job.n, tests, "explicit list of " + std::to_string(tests.size()) + " modules");
    } else {
      v = membership(m, cls, job.n, job.parsed_bound("2x2"), job.seed);
    }
    b = membership_json(v);
    b["statement"] = cls == ModuleClass::injective ? "Ext^1(F, M) = 0 for every test module F of type FP_n"
                                                   : "Tor_1(M, F) = 0 for every test module F of type FP_n";
    b["status"] = to_string(v.verdict);
    out.code = v.verdict == Verdict::out ? counterexample : ok;
  } else if (task == "closure") {
    const auto prop = parse_closure_property(job.has("property") ? job.input("property").get<std::string>() : "quotients");
    const auto rep = closure_check(job.cls(), job.n, r, prop, job.count("trials", 100), job.seed,
                                   job.parsed_bound("2x2"), job.jobs);
    b = closure_json(rep);
    b["statement"] = "closure of " + to_string(rep.cls) + " under " + to_string(prop);
    out.code = rep.passed() ? ok : rep.verify() ? counterexample : inconsistent;
  } else if (task == "pd-search") {
    const auto rep = pd_fpn_search(r, job.n, job.parsed_bound("2x2"), job.seed, job.jobs);
    b = pd_search_json(rep);
    b["statement"] = "pd <= 1 for finitely presented modules, via projectivity of the first syzygy";
    out.code = rep.verified() ? ok : counterexample;
  } else if (task == "consistency-report") {
    const auto rep = hereditary_consistency_report(r, job.n, job.parsed_bound("2x2"), job.seed,
                                                   job.count("trials", 100), job.jobs);
    b = consistency_json(rep);
    b["statement"] =
        "pd(FP_n) <= 1, n-hereditary matrix certificates and closure of I_n under quotients agree";
    out.code = !rep.agree() || (!rep.pd_pass() && !rep.cross_referenced()) ? inconsistent
               : rep.pd_pass()                                               ? ok
                                                                             : counterexample;
  } else if (task == "yoneda") {
    const FpModule m = job.module("M");
    std::vector<std::size_t> which;
    if (job.has("idempotent")) {
      which.push_back(idempotent_position(job, job.input("idempotent")));
    } else {
      for (std::size_t k = 0; k < r.idempotent_indices().size(); ++k) which.push_back(k);
    }
    json recs = json::array();
    bool all = true;
    for (std::size_t k : which) {
      const auto rec = yoneda_check(k, m);
      all = all && rec.equal();
      recs.push_back({{"idempotent", r.basis_names().at(rec.idempotent)}, {"hom", io::group_to_json(rec.hom)},
                      {"e_M", io::group_to_json(rec.e_m)}, {"tensor", io::group_to_json(rec.tensor)},
                      {"hom_map_bijective", rec.hom_map_bijective},
                      {"tensor_map_bijective", rec.tensor_map_bijective}, {"equal", rec.equal()}});
    }
    b = {{"statement", "Hom(A e_i, M) = e_i M via f -> f(e_i), and e_i A (x) M = e_i M via e_i (x) m -> e_i m"},
         {"module", io::module_to_json(m)}, {"records", recs}, {"status", all ? "verified" : "inconsistent"}};
    if (!all) out.code = inconsistent;
  } else if (task == "decomposition") {
    const FpModule m = job.module("M");
    const auto d = unital_decomposition(m);
    json comps = json::array();
    for (const auto& c : d.components)
      comps.push_back({{"idempotent", r.basis_names().at(c.idempotent)}, {"group", io::group_to_json(c.group)}});
    b = {{"statement", "M = sum of e_i M over the idempotents"}, {"module", io::module_to_json(m)},
         {"whole", io::group_to_json(d.whole)}, {"components", comps}, {"reconstructs", d.reconstructs},
         {"status", d.reconstructs ? "verified" : "inconsistent"}};
    if (!d.reconstructs) out.code = inconsistent;
  } else {
    throw input_error("unknown task '" + task + "'");
  }
  b["task"] = task;
  return out;
}

// ---------------------------------------------------------------------------
// Specs

inline const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {
      "pseudo-cok", "n-hereditary", "semi-hereditary", "ext", "tor", "character", "duality-check", "membership",
      "closure", "pd-search", "consistency-report", "hereditary-report", "split-cokernel", "projectivity", "hom",
      "yoneda", "decomposition"};
  return names;
}

/// Runs a spec: either one job, or shared settings plus a "jobs" array.
inline Outcome run_spec(json spec, const Options& opt) {
  if (spec.is_object() && spec.contains("spec") && spec.contains("results")) spec = spec.at("spec");
  if (!spec.is_object()) throw input_error("spec must be a JSON object");
  if (!spec.contains("ring")) throw input_error("spec needs a 'ring'");
  if (opt.seed) spec["seed"] = *opt.seed;
  if (opt.bound) spec["bound"] = *opt.bound;
  if (!spec.contains("seed")) spec["seed"] = 0;

  const bool batch = spec.contains("jobs");
  json list = batch ? spec.at("jobs") : json::array({spec});
  if (!list.is_array() || list.empty()) throw input_error("'jobs' must be a non-empty array");

  Outcome out;
  json results = json::array();
  bool any_counter = false, any_inconsistent = false;
  for (const auto& entry : list) {
    if (!entry.is_object() || !entry.contains("task")) throw input_error("every job needs a 'task'");
    Job job;
    job.spec = entry;
    for (const char* key : {"ring", "seed", "bound", "n", "trials"})
      if (!job.spec.contains(key) && spec.contains(key)) job.spec[key] = spec.at(key);
    if (opt.seed) job.spec["seed"] = *opt.seed;
    if (opt.bound) job.spec["bound"] = *opt.bound;
    job.ring = io::ring_from_json(job.spec.at("ring"));
    job.seed = seed_from_json(job.spec.at("seed"));
    job.n = job.spec.contains("n") ? io::size_from_json(job.spec.at("n"), "n") : 1;
    if (job.n == 0) throw input_error("n must be >= 1");
    if (job.spec.contains("bound")) job.bound = job.spec.at("bound").get<std::string>();
    job.jobs = opt.jobs;
    TaskResult t = run_task(job);
    if (t.code == counterexample) any_counter = true;
    if (t.code == inconsistent) any_inconsistent = true;
    json item = std::move(t.body);
    item["ring"] = io::ring_to_json(job.ring);
    item["seed"] = job.seed;
    item["exit_code"] = t.code;
    results.push_back(std::move(item));
  }
  out.exit_code = any_inconsistent ? inconsistent : any_counter ? counterexample : ok;
  out.report = {{"format", report_format}, {"spec", spec}, {"results", results}, {"exit_code", out.exit_code}};
  return out;
}

// ---------------------------------------------------------------------------
// Built-in demos

inline json path_algebra_a2() {
  return {{"type", "fin_dim_algebra"},
          {"p", "2"},
          {"basis", {"e1", "e2", "a"}},
          {"products", {{"e1*e1", "e1"}, {"e2*e2", "e2"}, {"e2*a", "a"}, {"a*e1", "a"}}},
          {"idempotents", {"e1", "e2"}}};
}

inline json cyclic(const std::string& r, const std::string& side = "left") {
  return {{"side", side}, {"generators", 1}, {"relations", json::array({json::array({r})})}};
}

inline json free_module(std::size_t k, const std::string& side = "left") {
  return {{"side", side}, {"generators", k}};
}

inline const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"Z", "Z4", "Z6", "F2", "A2"};
  return names;
}

inline json demo_spec(const std::string& name) {
  const auto mat = [](std::initializer_list<std::initializer_list<const char*>> rows) {
    json m = json::array();
    for (auto row : rows) {
      json r = json::array();
      for (const char* e : row) r.push_back(e);
      m.push_back(r);
    }
    return m;
  };
  if (name == "Z") {
    return {{"ring", {{"type", "integers"}}},
            {"seed", 2024},
            {"jobs",
             {{{"task", "semi-hereditary"}, {"A", mat({{"2"}})}},
              {{"task", "pseudo-cok"}, {"A", mat({{"2"}, {"3"}})}, {"n", 2}},
              {{"task", "n-hereditary"}, {"A", mat({{"2", "4"}, {"6", "8"}})}},
              {{"task", "ext"}, {"F", cyclic("2")}, {"N", cyclic("2")}},
              {{"task", "tor"}, {"N", cyclic("2")}, {"F", cyclic("2")}},
              {{"task", "hom"}, {"M", cyclic("2")}, {"N", cyclic("4")}},
              {{"task", "projectivity"}, {"M", cyclic("6")}},
              {{"task", "hereditary-report"}, {"bound", "4x4:10:200"}},
              {{"task", "pd-search"}, {"bound", "4x4:10:200"}},
              {{"task", "consistency-report"}, {"bound", "3x3:10:100"}, {"trials", 50}}}}};
  }
  if (name == "Z4") {
    return {{"ring", {{"type", "integers_mod"}, {"modulus", "4"}}},
            {"seed", 2024},
            {"jobs",
             {{{"task", "semi-hereditary"}, {"A", mat({{"2"}})}},
              {{"task", "n-hereditary"}, {"A", mat({{"2"}})}, {"n", 2}},
              {{"task", "split-cokernel"}, {"G", mat({{"2"}})}},
              {{"task", "projectivity"}, {"M", cyclic("2")}},
              {{"task", "ext"}, {"F", cyclic("2")}, {"N", cyclic("2")}},
              {{"task", "tor"}, {"N", cyclic("2", "right")}, {"F", cyclic("2")}},
              {{"task", "character"}, {"M", cyclic("2")}},
              {{"task", "duality-check"}, {"which", "i"}, {"F", cyclic("2")}, {"N", cyclic("2", "right")}},
              {{"task", "duality-check"}, {"which", "iii"}, {"F", cyclic("2", "right")}, {"N", cyclic("2", "right")}},
              {{"task", "duality-check"},
               {"which", "flat-injective"},
               {"N", cyclic("2", "right")},
               {"testset", {cyclic("2"), free_module(1), cyclic("1")}}},
              {{"task", "membership"}, {"M", free_module(1)}, {"class", "I_n"}, {"bound", "2x2"}},
              {{"task", "membership"}, {"M", cyclic("2")}, {"class", "I_n"}, {"bound", "2x2"}},
              {{"task", "closure"}, {"class", "I_n"}, {"property", "quotients"}, {"trials", 100}, {"bound", "2x2"}},
              {{"task", "pd-search"}, {"bound", "1x1"}},
              {{"task", "consistency-report"}, {"bound", "2x2"}}}}};
  }
  if (name == "Z6") {
    return {{"ring", {{"type", "integers_mod"}, {"modulus", "6"}}},
            {"seed", 2024},
            {"jobs",
             {{{"task", "semi-hereditary"}, {"A", mat({{"2"}})}},
              {{"task", "n-hereditary"}, {"A", mat({{"2"}})}},
              {{"task", "projectivity"}, {"M", cyclic("2")}},
              {{"task", "split-cokernel"}, {"G", mat({{"3"}})}},
              {{"task", "character"}, {"M", {{"generators", 2}, {"relations", mat({{"2", "0"}})}}}},
              {{"task", "duality-check"},
               {"which", "flat-injective"},
               {"N", cyclic("3", "right")},
               {"testset", {cyclic("2"), cyclic("3")}}},
              {{"task", "closure"}, {"class", "I_n"}, {"property", "quotients"}, {"trials", 100}, {"bound", "2x2"}},
              {{"task", "consistency-report"}, {"bound", "2x2"}}}}};
  }
  if (name == "F2") {
    return {{"ring", {{"type", "prime_field"}, {"p", "2"}}},
            {"seed", 2024},
            {"jobs",
             {{{"task", "semi-hereditary"}, {"A", mat({{"1", "1"}, {"1", "1"}})}},
              {{"task", "hereditary-report"}, {"bound", "3x3"}},
              {{"task", "closure"}, {"class", "I_n"}, {"property", "quotients"}, {"trials", 100}, {"bound", "2x2"}},
              {{"task", "duality-check"},
               {"which", "flat-injective"},
               {"N", free_module(1, "right")},
               {"bound", "2x2"}},
              {{"task", "consistency-report"}, {"bound", "2x2"}}}}};
  }
  if (name == "A2") {
    const json a_mod = free_module(1);
    const json ae1 = cyclic("e2");  // A e1 = A / A e2
    const json ae2 = cyclic("e1");
    return {{"ring", path_algebra_a2()},
            {"seed", 2024},
            {"jobs",
             {{{"task", "decomposition"}, {"M", a_mod}},
              {{"task", "yoneda"}, {"M", a_mod}},
              {{"task", "yoneda"}, {"M", ae1}},
              {{"task", "yoneda"}, {"M", ae2}},
              {{"task", "yoneda"}, {"M", free_module(0)}},
              {{"task", "semi-hereditary"}, {"A", mat({{"a"}})}},
              {{"task", "projectivity"}, {"M", cyclic("a")}},
              {{"task", "ext"}, {"F", cyclic("a")}, {"N", ae1}},
              {{"task", "character"}, {"M", ae1}},
              {{"task", "duality-check"}, {"which", "i"}, {"F", cyclic("a")}, {"N", cyclic("a", "right")}},
              {{"task", "consistency-report"}, {"bound", "1x2"}}}}};
  }
  throw input_error("unknown demo '" + name + "' (choose Z, Z4, Z6, F2 or A2)");
}

}  // namespace hereditas::jobs
