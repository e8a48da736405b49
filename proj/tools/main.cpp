// casson: exact Casson invariant computations on Heegaard gluing words.
//
// Verbs: eval, johnson, cocycle, surgery, connected-sum,
//        verify {unique-cocycle, lantern, magnus, suzuki, minus-id, suite}.
// Exit codes: 0 success, 1 a verification failed, 2 bad input.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "casson/checks.hpp"

using namespace casson;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

json report_header(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string default_convention() {
  if (const char* env = std::getenv("CASSON_CONVENTION")) {
    const std::string v = env;
    if (v != "f" && v != "lambda")
      throw ValidationError("CASSON_CONVENTION must be 'f' or 'lambda', got '" +
                            v + "'");
    return v;
  }
  return "f";
}

void check_verify_genus(int genus) {
  if (genus < 3 || genus > 6)
    throw ValidationError(
        "verify: --genus must be between 3 and 6 (exact solvers are kept at "
        "desk scale)");
}

json classification_json(const SideClassification& c) {
  json j;
  j["ta_compatible"] = c.ta_compatible;
  j["tb_compatible"] = c.tb_compatible;
  j["ab_compatible"] = c.ab_compatible;
  j["neither"] = c.neither();
  return j;
}

json eval_report(const AnnotatedWord& w, const std::string& convention,
                 int sign) {
  json rep = report_header("eval");
  rep["genus"] = w.genus();
  rep["convention"] = convention;
  const Int f = eval_F(w);
  const Int lambda = Int(sign) * eval_lambda(w);
  rep["F"] = io::int_to_json(f);
  rep["lambda"] = io::int_to_json(lambda);
  rep["result"] = convention == "f" ? io::int_to_json(f)
                                    : io::int_to_json(lambda);
  rep["tau"] = io::cube_to_json(tau(w));
  return rep;
}

// A tau input for `cocycle`: either a word file or {"genus":g,"tau":[...]}.
std::pair<int, ExteriorCubeVector> tau_from_file(const std::string& path) {
  const json j = io::load_json_file(path);
  if (j.is_object() && j.contains("factors")) {
    const AnnotatedWord w = io::annotated_word_from_json(j);
    return {w.genus(), tau(w)};
  }
  if (j.is_object() && j.contains("tau")) {
    if (!j.contains("genus") || !j["genus"].is_number_integer())
      throw ValidationError(path + ": tau file needs an integer \"genus\"");
    const int genus = j["genus"].get<int>();
    return {genus, io::cube_from_json(genus, j["tau"], "tau")};
  }
  throw ValidationError(path + ": expected a word file (with \"factors\") or "
                               "a tau file (with \"tau\")");
}

std::string letter_name(int gen, int rank) {
  // Surface alphabet when the rank is even: x_i then y_i.
  if (rank >= 2 && rank % 2 == 0 && gen >= rank / 2)
    return "y" + std::to_string(gen - rank / 2 + 1);
  return "x" + std::to_string(gen + 1);
}

json sparse_form_json(const BilinearForm& form) {
  json entries = json::array();
  const std::vector<Triple> basis = cube_monomials(form.genus());
  for (long r = 0; r < form.matrix().rows(); ++r)
    for (long c = 0; c < form.matrix().cols(); ++c) {
      if (form.matrix()(r, c) == 0) continue;
      json e;
      const Triple& rt = basis[static_cast<std::size_t>(r)];
      const Triple& ct = basis[static_cast<std::size_t>(c)];
      e["row_triple"] = json::array({rt[0], rt[1], rt[2]});
      e["col_triple"] = json::array({ct[0], ct[1], ct[2]});
      e["value"] = io::int_to_json(form.matrix()(r, c));
      entries.push_back(std::move(e));
    }
  return entries;
}

int finish_checks(json& rep, const std::vector<checks::CheckResult>& results) {
  json checks_json = json::array();
  bool all = true;
  for (const auto& r : results) {
    json c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    if (!r.details.empty()) c["details"] = r.details;
    checks_json.push_back(std::move(c));
    all = all && r.pass;
  }
  rep["checks"] = std::move(checks_json);
  rep["pass"] = all;
  emit(rep);
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Casson invariant computations on Heegaard gluing words"};
  app.require_subcommand(1);

  // eval
  std::string eval_word_file;
  std::string convention;
  int sign = 1;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Evaluate F and lambda on a word file");
  eval_cmd->add_option("--word", eval_word_file, "annotated word file")
      ->required();
  eval_cmd->add_option("--convention", convention,
                       "which value is the result: f or lambda");
  eval_cmd->add_option("--sign", sign, "lambda sign flip: +1 or -1")
      ->check(CLI::IsMember({1, -1}));

  // johnson
  std::string johnson_word_file;
  CLI::App* johnson_cmd = app.add_subcommand(
      "johnson", "tau of a word with its W-decomposition");
  johnson_cmd->add_option("--word", johnson_word_file, "word file")
      ->required();

  // cocycle
  std::string left_file, right_file;
  CLI::App* cocycle_cmd = app.add_subcommand(
      "cocycle", "2J of two tau vectors or word files");
  cocycle_cmd->add_option("--left", left_file, "word or tau file")->required();
  cocycle_cmd->add_option("--right", right_file, "word or tau file")
      ->required();

  // surgery
  std::string seifert_file;
  long long surgery_n = 0;
  int surgery_sign = 1;
  CLI::App* surgery_cmd = app.add_subcommand(
      "surgery", "Casson invariant of 1/n surgery from a Seifert matrix");
  surgery_cmd->add_option("--seifert", seifert_file, "Seifert matrix file")
      ->required();
  surgery_cmd->add_option("--n", surgery_n, "surgery parameter")->required();
  surgery_cmd->add_option("--sign", surgery_sign, "handedness: +1 or -1")
      ->check(CLI::IsMember({1, -1}));

  // connected-sum
  std::string sum_a, sum_b, sum_out;
  CLI::App* sum_cmd =
      app.add_subcommand("connected-sum", "Splice two word files");
  sum_cmd->add_option("a", sum_a, "first word file")->required();
  sum_cmd->add_option("b", sum_b, "second word file")->required();
  sum_cmd->add_option("-o,--output", sum_out, "output word file")->required();

  // verify
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Machine-check the algebraic identities");
  verify_cmd->require_subcommand(1);
  int genus = 3;
  int trials = checks::kDefaultTrials;
  unsigned long seed = checks::kDefaultSeed;
  std::string lantern_config;

  CLI::App* unique_cmd = verify_cmd->add_subcommand(
      "unique-cocycle", "solution space of the admissibility constraints");
  unique_cmd->add_option("--genus", genus, "genus (3 or 4)");

  CLI::App* lantern_cmd =
      verify_cmd->add_subcommand("lantern", "homology-level lantern relation");
  lantern_cmd->add_option("--genus", genus, "genus");
  lantern_cmd->add_option("--trials", trials, "random orthogonal triples");
  lantern_cmd->add_option("--config", lantern_config,
                          "JSON file with classes c1, c2, c3");

  CLI::App* magnus_cmd =
      verify_cmd->add_subcommand("magnus", "sigma2 K12 sigma2^-1 = K12^-1");
  magnus_cmd->add_option("--genus", genus, "free group rank");

  CLI::App* suzuki_cmd = verify_cmd->add_subcommand(
      "suzuki", "tabled generators and their homology actions");
  suzuki_cmd->add_option("--genus", genus, "genus");

  CLI::App* minus_cmd = verify_cmd->add_subcommand(
      "minus-id", "-Id acts as -Id on the whole cube");
  minus_cmd->add_option("--genus", genus, "genus");

  CLI::App* suite_cmd = verify_cmd->add_subcommand(
      "suite", "every module invariant, randomized plus exhaustive");
  suite_cmd->add_option("--genus", genus, "genus");
  suite_cmd->add_option("--trials", trials, "randomized cases per property");
  suite_cmd->add_option("--seed", seed, "PRNG seed");

  try {
    app.parse(argc, argv);

    if (*eval_cmd) {
      if (convention.empty()) convention = default_convention();
      if (convention != "f" && convention != "lambda")
        throw ValidationError("--convention must be 'f' or 'lambda'");
      const AnnotatedWord w =
          io::annotated_word_from_json(io::load_json_file(eval_word_file));
      json rep = eval_report(w, convention, sign);
      emit(rep);
      return kExitOk;
    }

    if (*johnson_cmd) {
      const json j = io::load_json_file(johnson_word_file);
      const TwistWord w = io::word_from_json(j);
      json rep = report_header("johnson");
      rep["genus"] = w.genus();
      rep["torelli"] = is_torelli(w);
      const ExteriorCubeVector t = tau(w);
      rep["tau"] = io::cube_to_json(t);
      const WSplit s = w_split(t);
      json split;
      split["wA"] = io::cube_to_json(s.wA);
      split["wAB"] = io::cube_to_json(s.wAB);
      split["wB"] = io::cube_to_json(s.wB);
      rep["w_split"] = std::move(split);
      rep["classification"] = classification_json(classify_side(w));
      emit(rep);
      return kExitOk;
    }

    if (*cocycle_cmd) {
      const auto [gl, left] = tau_from_file(left_file);
      const auto [gr, right] = tau_from_file(right_file);
      if (gl != gr)
        throw ValidationError("cocycle: genus mismatch between inputs (" +
                              std::to_string(gl) + " vs " +
                              std::to_string(gr) + ")");
      json rep = report_header("cocycle");
      rep["genus"] = gl;
      rep["J"] = io::int_to_json(j_pairing(left, right));
      rep["cocycle"] = io::int_to_json(casson_cocycle(left, right));
      emit(rep);
      return kExitOk;
    }

    if (*surgery_cmd) {
      const SeifertMatrix v =
          io::seifert_from_json(io::load_json_file(seifert_file));
      const LaurentPolynomial delta = alexander_from_seifert(v);
      json rep = report_header("surgery");
      rep["n"] = surgery_n;
      rep["sign"] = surgery_sign;
      json alex;
      alex["terms"] = io::laurent_to_json(delta);
      alex["display"] = io::laurent_to_string(delta);
      rep["alexander"] = std::move(alex);
      rep["half_dd1"] =
          io::int_to_json(half_second_derivative_at_one(delta));
      const Int lambda =
          casson_surgery(v, Int(static_cast<long>(surgery_n)), surgery_sign);
      rep["lambda"] = io::int_to_json(lambda);
      rep["F"] = io::int_to_json(-lambda);
      emit(rep);
      return kExitOk;
    }

    if (*sum_cmd) {
      const AnnotatedWord a =
          io::annotated_word_from_json(io::load_json_file(sum_a));
      const AnnotatedWord b =
          io::annotated_word_from_json(io::load_json_file(sum_b));
      const AnnotatedWord sum = connected_sum(a, b);
      io::write_json_file(sum_out, io::annotated_word_to_json(sum));
      json rep = eval_report(sum, default_convention(), 1);
      rep["command"] = "connected-sum";
      rep["output"] = sum_out;
      emit(rep);
      return kExitOk;
    }

    if (*unique_cmd) {
      check_verify_genus(genus);
      const UniquenessReport rep = uniqueness_certificate(genus);
      json out = report_header("verify unique-cocycle");
      out["genus"] = genus;
      out["dimension"] = rep.dimension;
      out["generator"] =
          rep.basis.empty() ? json::array() : sparse_form_json(rep.basis[0]);
      out["matches_J"] = rep.matches_pairing;
      const RelaxedUniquenessReport relaxed = relaxed_invariance_basis(genus);
      json rel;
      rel["dimension"] = relaxed.dimension;
      rel["contains_J"] = relaxed.contains_pairing;
      rel["contains_Jt"] = relaxed.contains_transpose;
      out["relaxed"] = std::move(rel);
      const bool pass = rep.dimension == 1 && rep.matches_pairing &&
                        relaxed.dimension == 2 && relaxed.contains_pairing &&
                        relaxed.contains_transpose;
      out["pass"] = pass;
      emit(out);
      return pass ? kExitOk : kExitVerifyFailed;
    }

    if (*lantern_cmd) {
      check_verify_genus(genus);
      json out = report_header("verify lantern");
      out["genus"] = genus;
      std::vector<checks::CheckResult> results;
      if (!lantern_config.empty()) {
        const json cfg = io::load_json_file(lantern_config);
        if (!cfg.is_object() || !cfg.contains("genus"))
          throw ValidationError(lantern_config +
                                ": expected {genus, c1, c2, c3}");
        const int cg = cfg["genus"].get<int>();
        const LanternReport rep = lantern_check(
            io::vector_from_json(cg, cfg.at("c1"), "c1"),
            io::vector_from_json(cg, cfg.at("c2"), "c2"),
            io::vector_from_json(cg, cfg.at("c3"), "c3"));
        checks::CheckResult r;
        r.name = "lantern_config";
        r.pass = rep.holds;
        r.details = {{"pairwise_orthogonal", rep.pairwise_orthogonal},
                     {"holds", rep.holds}};
        if (!rep.holds)
          r.details["residual"] = io::matrix_to_json(rep.residual.entries());
        results.push_back(std::move(r));
      }
      results.push_back(checks::check_lantern_standard(genus));
      results.push_back(checks::check_lantern_random(genus, trials, seed));
      return finish_checks(out, results);
    }

    if (*magnus_cmd) {
      check_verify_genus(genus);
      const MagnusReport rep = magnus_identity_check(genus);
      json out = report_header("verify magnus");
      out["genus"] = genus;
      out["conjugation_identity"] = rep.conjugation_identity;
      out["sigma_involution"] = rep.sigma_involution;
      out["k12_inverse"] = rep.k12_inverse;
      if (!rep.witnesses.empty()) {
        json ws = json::array();
        for (const auto& [expected, actual] : rep.witnesses) {
          json w;
          w["expected"] = to_string(expected);
          w["actual"] = to_string(actual);
          ws.push_back(std::move(w));
        }
        out["witnesses"] = std::move(ws);
      }
      out["pass"] = rep.pass();
      emit(out);
      return rep.pass() ? kExitOk : kExitVerifyFailed;
    }

    if (*suzuki_cmd) {
      check_verify_genus(genus);
      json out = report_header("verify suzuki");
      out["genus"] = genus;
      const SuzukiGenerators s = suzuki_generators(genus);
      json tables;
      const std::vector<std::tuple<const char*, const Endo*,
                                   const SymplecticMatrix*>>
          gens{{"Q", &s.q, &s.q_ab},
               {"sigma", &s.sigma, &s.sigma_ab},
               {"P", &s.p, &s.p_ab},
               {"U", &s.u, &s.u_ab}};
      for (const auto& [name, endo, ab] : gens) {
        json gen;
        json images = json::array();
        for (int i = 0; i < endo->rank(); ++i)
          images.push_back(letter_name(i, endo->rank()) + " -> " +
                           to_string(endo->image(i)));
        gen["action"] = std::move(images);
        gen["abelianization"] = io::matrix_to_json(ab->entries());
        tables[name] = std::move(gen);
      }
      out["generators"] = std::move(tables);
      std::vector<checks::CheckResult> results;
      results.push_back(checks::check_suzuki_q_order(genus));
      results.push_back(checks::check_suzuki_sp_b(genus));
      results.push_back(
          checks::check_abelianization_functorial(genus, trials, seed));
      return finish_checks(out, results);
    }

    if (*minus_cmd) {
      check_verify_genus(genus);
      const MinusIdReport rep = minus_id_check(genus);
      json out = report_header("verify minus-id");
      out["genus"] = genus;
      out["monomials"] = rep.checked;
      out["all_negated"] = rep.all_negated();
      if (!rep.failures.empty()) {
        json fails = json::array();
        for (const Triple& t : rep.failures)
          fails.push_back(json::array({t[0], t[1], t[2]}));
        out["failures"] = std::move(fails);
      }
      out["pass"] = rep.all_negated();
      emit(out);
      return rep.all_negated() ? kExitOk : kExitVerifyFailed;
    }

    if (*suite_cmd) {
      check_verify_genus(genus);
      json out = report_header("verify suite");
      out["genus"] = genus;
      out["trials"] = trials;
      out["seed"] = seed;
      return finish_checks(out, checks::run_suite(genus, trials, seed));
    }

    throw ValidationError("no subcommand selected");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
