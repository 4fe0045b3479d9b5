#include "nilgood/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilgood/expr_analysis.hpp"
#include "nilgood/io.hpp"

namespace nilgood {

namespace {

void print_judgment_text(std::ostream& out, const std::string& expr, const Judgment& j) {
  out << "expression: " << expr << "\n";
  out << "ring: " << j.ring.str() << "\n";
  out << "verdict: " << verdict_str(j.verdict) << "\n";
  out << "trace:\n";
  for (const auto& t : j.trace)
    out << "  [" << t.rule << "] " << t.citation << " @ " << t.at << "\n";
  if (!j.notes.empty()) {
    out << "notes:\n";
    for (const auto& n : j.notes) out << "  - " << n << "\n";
  }
}

std::vector<int> parse_prime_list(const std::string& flag) {
  std::vector<int> primes;
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("--primes expects a comma-separated list of primes");
    int p = std::stoi(item);
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    primes.push_back(p);
  }
  if (primes.empty()) throw std::invalid_argument("--primes expects at least one prime");
  return primes;
}

CoeffRing coeff_ring_from_flag(const std::string& flag) {
  RingDescriptor ring = parse_ring_flag(flag);
  if (ring.kind == RingDescriptor::Kind::FieldP) return CoeffRing::Fp(ring.p);
  if (ring.kind == RingDescriptor::Kind::Integers) return CoeffRing::integers();
  throw std::invalid_argument("homology coefficients must be p:<prime> or Z");
}

void print_graded_text(std::ostream& out, const GradedModule& m) {
  for (int d = 0; d <= m.max_degree(); ++d) {
    out << "H_" << d << ": ";
    if (m.ring.field)
      out << "dim " << m.entries[d].free_rank;
    else
      out << m.entries[d].str();
    out << "\n";
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic nilpotency decisions and good/bad classification of "
               "classifying-space expressions"};
  app.set_version_flag("--version", "nilgood 0.1.0");
  app.require_subcommand(1);

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "classify an expression at a solid ring");
  std::string classify_expr, classify_ring;
  bool classify_json = false;
  classify_cmd->add_option("expression", classify_expr, "group or space expression")
      ->required();
  classify_cmd->add_option("--ring", classify_ring, "p:<prime> | Z | Zinv:2,3 | Zmod:<n>")
      ->required();
  classify_cmd->add_flag("--json", classify_json, "JSON output");

  // profile
  auto* profile_cmd =
      app.add_subcommand("profile", "classify a group expression at several primes");
  std::string profile_expr, profile_primes;
  bool profile_json = false;
  profile_cmd->add_option("expression", profile_expr, "group expression")->required();
  profile_cmd->add_option("--primes", profile_primes, "comma-separated primes")->required();
  profile_cmd->add_flag("--json", profile_json, "JSON output");

  // nilpotent-action
  auto* action_cmd =
      app.add_subcommand("nilpotent-action", "decide nilpotency of an action file");
  std::string action_file;
  bool action_brute = false, action_json = false;
  action_cmd->add_option("file", action_file, "action file (JSON)")->required();
  action_cmd->add_flag("--brute-force", action_brute,
                       "also run the chain-search oracle and report agreement");
  action_cmd->add_flag("--json", action_json, "JSON output");

  // kernel-rank
  auto* rank_cmd = app.add_subcommand(
      "kernel-rank", "free rank of the kernel onto the finite part of a free product");
  std::string rank_expr;
  int rank_p = 0;
  bool rank_json = false;
  rank_cmd->add_option("expression", rank_expr, "free product expression")->required();
  rank_cmd->add_option("--p", rank_p, "prime")->required();
  rank_cmd->add_flag("--json", rank_json, "JSON output");

  // euler
  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of a group expression");
  std::string euler_expr;
  bool euler_json = false;
  euler_cmd->add_option("expression", euler_expr, "group expression")->required();
  euler_cmd->add_flag("--json", euler_json, "JSON output");

  // homology
  auto* hom_cmd = app.add_subcommand("homology", "graded homology of a space expression");
  std::string hom_expr, hom_ring = "p:2";
  int hom_maxdeg = 4;
  bool hom_json = false;
  hom_cmd->add_option("expression", hom_expr, "space expression")->required();
  hom_cmd->add_option("--ring", hom_ring, "p:<prime> | Z");
  hom_cmd->add_option("--max-degree", hom_maxdeg, "top degree (default 4)");
  hom_cmd->add_flag("--json", hom_json, "JSON output");

  // series
  auto* series_cmd =
      app.add_subcommand("series", "lower p-central series of a finite group expression");
  std::string series_expr;
  int series_p = 0;
  bool series_json_flag = false;
  series_cmd->add_option("expression", series_expr, "finite group expression")->required();
  series_cmd->add_option("--p", series_p, "prime")->required();
  series_cmd->add_flag("--json", series_json_flag, "JSON output");

  // zlattice
  auto* zl_cmd = app.add_subcommand(
      "zlattice", "nilpotency over free abelian lattices; file mode or sweep mode");
  std::string zl_file;
  bool zl_sweep = false, zl_serial = false, zl_json = false;
  int zl_rank = 2, zl_entry = 2, zl_order = 6;
  zl_cmd->add_option("file", zl_file, "representation file");
  zl_cmd->add_flag("--sweep", zl_sweep, "enumerate single-generator representations");
  zl_cmd->add_option("--rank", zl_rank, "sweep rank (1..3, default 2)");
  zl_cmd->add_option("--max-entry", zl_entry, "sweep entry bound (default 2)");
  zl_cmd->add_option("--max-order", zl_order, "sweep order bound (default 6)");
  zl_cmd->add_flag("--serial", zl_serial, "use the serial reference kernel");
  zl_cmd->add_flag("--json", zl_json, "JSON output");

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "bar-resolution homology of a small finite group");
  std::string oracle_expr, oracle_ring = "p:2";
  int oracle_maxdeg = 4;
  bool oracle_json = false;
  oracle_cmd->add_option("expression", oracle_expr, "finite group expression or @table")
      ->required();
  oracle_cmd->add_option("--ring", oracle_ring, "p:<prime> | Z");
  oracle_cmd->add_option("--max-degree", oracle_maxdeg, "top degree (default 4)");
  oracle_cmd->add_flag("--json", oracle_json, "JSON output");

  std::vector<const char*> argv;
  argv.push_back("nilgood");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    std::stringstream outbuf, errbuf;
    int code = app.exit(e, outbuf, errbuf);
    out << outbuf.str();
    err << errbuf.str();
    return code == 0 ? 0 : 2;
  }

  if (classify_cmd->parsed()) {
    RingDescriptor ring = parse_ring_flag(classify_ring);
    Judgment j;
    std::string printed;
    if (looks_like_space_expr(classify_expr)) {
      SpaceExprPtr s = parse_space_expr(classify_expr);
      printed = print_space_expr(s);
      j = classify(s, ring);
    } else {
      GroupExprPtr e = parse_group_expr(classify_expr);
      printed = print_group_expr(e);
      j = classify(e, ring);
    }
    if (classify_json) {
      ordered_json doc = judgment_json(j);
      doc["expression"] = printed;
      out << doc.dump(2) << "\n";
    } else {
      print_judgment_text(out, printed, j);
    }
    return 0;
  }

  if (profile_cmd->parsed()) {
    GroupExprPtr e = parse_group_expr(profile_expr);
    auto primes = parse_prime_list(profile_primes);
    auto profile = classify_profile(e, primes);
    if (profile_json) {
      ordered_json doc;
      doc["expression"] = print_group_expr(e);
      doc["profile"] = ordered_json::array();
      for (const auto& [p, j] : profile) {
        ordered_json entry = judgment_json(j);
        entry["p"] = p;
        doc["profile"].push_back(std::move(entry));
      }
      out << doc.dump(2) << "\n";
    } else {
      out << "expression: " << print_group_expr(e) << "\n";
      for (const auto& [p, j] : profile)
        out << "p=" << p << ": " << verdict_str(j.verdict) << "\n";
    }
    return 0;
  }

  if (action_cmd->parsed()) {
    FiniteAction action = load_action_file(action_file);
    NilpotencyDecision decision = is_nilpotent_action(action);
    std::optional<bool> brute;
    if (action_brute) brute = brute_force_nilpotency(action);
    if (action_json) {
      ordered_json doc = decision_json(decision);
      doc["actor_order"] = action.actor->order();
      doc["target_order"] = action.target->order();
      if (brute) {
        doc["brute_force"] = *brute;
        doc["oracle_agrees"] = *brute == decision.nilpotent;
      }
      out << doc.dump(2) << "\n";
    } else {
      out << "actor order: " << action.actor->order() << "\n";
      out << "target order: " << action.target->order() << "\n";
      out << "nilpotent: " << (decision.nilpotent ? "yes" : "no") << "\n";
      const SeriesChain& chain =
          decision.witness ? *decision.witness : SeriesChain{};
      if (decision.witness) {
        out << "witness series orders:";
        for (const auto& t : chain.terms) out << " " << t.order();
        out << "\n";
      }
      if (decision.obstruction)
        out << "obstruction: stabilized subgroup of order "
            << decision.obstruction->order() << "\n";
      if (brute)
        out << "chain-search oracle: " << (*brute ? "nilpotent" : "not nilpotent")
            << (*brute == decision.nilpotent ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    return 0;
  }

  if (rank_cmd->parsed()) {
    GroupExprPtr e = parse_group_expr(rank_expr);
    long long rank = kurosh_kernel_rank(e, rank_p);
    if (rank_json) {
      ordered_json doc;
      doc["expression"] = print_group_expr(e);
      doc["p"] = rank_p;
      doc["rank"] = rank;
      out << doc.dump(2) << "\n";
    } else {
      out << rank << "\n";
    }
    return 0;
  }

  if (euler_cmd->parsed()) {
    GroupExprPtr e = parse_group_expr(euler_expr);
    Rational chi = euler_characteristic(e);
    if (euler_json) {
      ordered_json doc;
      doc["expression"] = print_group_expr(e);
      doc["numerator"] = chi.num();
      doc["denominator"] = chi.den();
      doc["pretty"] = chi.str();
      out << doc.dump(2) << "\n";
    } else {
      out << chi.str() << "\n";
    }
    return 0;
  }

  if (hom_cmd->parsed()) {
    SpaceExprPtr s = parse_space_expr(hom_expr);
    GradedModule m = space_homology(s, coeff_ring_from_flag(hom_ring), hom_maxdeg);
    if (hom_json) {
      ordered_json doc = graded_json(m);
      doc["space"] = print_space_expr(s);
      out << doc.dump(2) << "\n";
    } else {
      out << "space: " << print_space_expr(s) << "\n";
      out << "ring: " << m.ring.str() << "\n";
      print_graded_text(out, m);
    }
    return 0;
  }

  if (series_cmd->parsed()) {
    GroupExprPtr e = parse_group_expr(series_expr);
    GroupPtr G = realize_finite(e);
    SeriesChain chain = lower_p_central_series(G, series_p);
    if (series_json_flag) {
      ordered_json doc = series_json(chain);
      doc["group"] = print_group_expr(e);
      doc["p"] = series_p;
      out << doc.dump(2) << "\n";
    } else {
      out << "group: " << print_group_expr(e) << " (order " << G->order() << ")\n";
      out << "orders:";
      for (const auto& t : chain.terms) out << " " << t.order();
      out << (chain.stabilized ? " (stabilized)" : "") << "\n";
      out << "reaches trivial: " << (chain.terms.back().is_trivial() ? "yes" : "no")
          << "\n";
    }
    return 0;
  }

  if (zl_cmd->parsed()) {
    if (zl_sweep && !zl_file.empty())
      throw std::invalid_argument("zlattice: give either a file or --sweep, not both");
    if (!zl_sweep && zl_file.empty())
      throw std::invalid_argument("zlattice: give a representation file or --sweep");
    if (zl_sweep) {
      SweepReport report =
          verify_nilpotent_iff_trivial(SweepSpec{zl_rank, zl_entry, zl_order}, !zl_serial);
      if (zl_json) {
        out << sweep_json(report).dump(2) << "\n";
      } else {
        out << "candidates: " << report.candidates << "\n";
        out << "representations (unimodular, finite order): " << report.representations
            << "\n";
        out << "nilpotent: " << report.nilpotent << "\n";
        out << "identity representations: " << report.identity_count << "\n";
        out << "counterexamples to nilpotent-implies-trivial: "
            << report.counterexamples.size() << "\n";
      }
      return 0;
    }
    IntegerRepresentation rep = load_representation_file(zl_file);
    SubspaceChain chain = rational_series(rep);
    bool nilpotent = chain.dims.back() == 0;
    bool doubling_demo = !nilpotent && rep.rank == 1 && rep.generators.size() == 1;
    if (zl_json) {
      ordered_json doc;
      doc["rank"] = rep.rank;
      doc["generators"] = rep.generators.size();
      doc["nilpotent"] = nilpotent;
      doc["chain"] = subspace_chain_json(chain);
      if (doubling_demo)
        doc["integer_chain_indices"] = rank1_integer_chain(rep.generators[0][0][0], 4);
      out << doc.dump(2) << "\n";
    } else {
      out << "rank: " << rep.rank << ", generators: " << rep.generators.size() << "\n";
      out << "nilpotent: " << (nilpotent ? "yes" : "no") << "\n";
      out << "rational chain dims:";
      for (int d : chain.dims) out << " " << d;
      out << " (stabilized at index " << chain.stabilized_at << ")\n";
      if (doubling_demo) {
        out << "integer image chain indices:";
        for (long long idx : rank1_integer_chain(rep.generators[0][0][0], 4))
          out << " " << idx;
        out << " ... (the sublattice chain never reaches zero)\n";
      }
    }
    return 0;
  }

  if (oracle_cmd->parsed()) {
    GroupPtr G = group_from_source(oracle_expr);
    GradedModule m = bar_homology_oracle(G, coeff_ring_from_flag(oracle_ring), oracle_maxdeg);
    if (oracle_json) {
      ordered_json doc = graded_json(m);
      doc["group"] = oracle_expr;
      doc["order"] = G->order();
      out << doc.dump(2) << "\n";
    } else {
      out << "group order: " << G->order() << "\n";
      out << "ring: " << m.ring.str() << "\n";
      print_graded_text(out, m);
    }
    return 0;
  }

  err << "no subcommand selected\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const limit_error& ex) {
    err << "limit exceeded: " << ex.what() << "\n";
    return 3;
  } catch (const std::overflow_error& ex) {
    err << "limit exceeded: " << ex.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace nilgood
