#include "cli.hpp"

#include <chrono>
#include <sstream>

#include "scf/circle.hpp"
#include "scf/json_io.hpp"
#include "scf/so3.hpp"
#include "scf/sympair.hpp"
#include "scf/version.hpp"

namespace scf::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

TorusElement parse_element(const std::string& text, const std::string& group_text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed.front() == '{') {
    const json j = json::parse(trimmed, nullptr, false);
    if (j.is_discarded()) throw invalid_input("malformed element JSON: " + text);
    return torus_element_from_json(j);
  }

  std::vector<Turn> turns;
  if (!trimmed.empty() && trimmed.front() == '[') {
    const json arr = json::parse(trimmed, nullptr, false);
    if (arr.is_discarded() || !arr.is_array())
      throw invalid_input("malformed turn array: " + text);
    for (const auto& item : arr) {
      if (item.is_string()) turns.push_back(Turn::parse(item.get<std::string>()));
      else if (item.is_number_integer()) turns.push_back(Turn(item.get<std::int64_t>(), 1));
      else throw invalid_input("turns must be \"p/q\" strings");
    }
  } else {
    std::string piece;
    std::istringstream is(trimmed);
    while (std::getline(is, piece, ',')) turns.push_back(Turn::parse(piece));
  }
  if (group_text.empty())
    throw invalid_input("bare turn lists need --group to supply the group tag");
  return TorusElement(std::move(turns), parse_group_spec(group_text));
}

std::string verdict_disclaimer(const std::string& what, std::int64_t bound) {
  std::ostringstream os;
  os << what << " verified up to bound " << bound
     << " only; a holds verdict is a bounded search result, not a proof for all orders.";
  return os.str();
}

json circle_config(const RunConfig& c, std::int64_t m_max) {
  return json{{"weights", c.weights}, {"m_max", m_max}, {"workers", c.workers}};
}

void run_circle(const RunConfig& config, Report& report) {
  const WeightSequence a = normalize_weights(config.weights);
  const std::int64_t m_max = config.m_max > 0 ? config.m_max : default_modulus_bound(a);
  report.config = circle_config(config, m_max);

  const CircleVerdict verdict = decide_scf_circle(a, m_max, config.workers);
  if (!verdict.holds() && !verify_witness_circle(a, *verdict.witness))
    throw std::runtime_error("internal error: circle witness failed re-verification");
  report.verdicts.push_back(circle_verdict_json(verdict));

  std::ostringstream os;
  if (verdict.holds()) {
    os << "weights " << a.str() << ": SCF holds in U(" << a.size() << ") for all moduli m <= "
       << m_max << "\n";
    report.disclaimers.push_back(verdict_disclaimer("circle SCF", m_max));
    report.exit_code = kExitHolds;
  } else {
    const auto& w = *verdict.witness;
    const auto [hz, hw] = realized_pair(a, w.m, w.k);
    os << "weights " << a.str() << ": SCF fails in U(" << a.size() << "): k*a == a (mod m) as"
       << " multisets for (m, k) = (" << w.m << ", " << w.k << ")\n"
       << "  h(z) = " << hz.str() << "\n  h(w) = " << hw.str()
       << "\n  distinct parameters, conjugate images\n";
    report.exit_code = kExitFails;
  }
  report.text = os.str();
}

void run_so3(const RunConfig& config, Report& report) {
  const SpinSequence a(config.spins);
  report.config = json{{"spins", a.spins}, {"q_max", config.q_max}, {"workers", config.workers}};

  const So3Verdict verdict = decide_scf_so3(a, config.q_max, config.workers);
  if (!verdict.holds() && !verify_witness_so3(a, *verdict.witness))
    throw std::runtime_error("internal error: rotation witness failed re-verification");
  report.verdicts.push_back(so3_verdict_json(verdict));

  const AngleProfile profile = expand_profile(a);
  std::ostringstream os;
  if (verdict.holds()) {
    os << "spins " << a.str() << ": SCF holds in SO(" << profile.ambient_dim
       << ") for all angle orders q <= " << config.q_max << "\n";
    report.disclaimers.push_back(verdict_disclaimer("rotation-image SCF", config.q_max));
    report.exit_code = kExitHolds;
  } else {
    const auto& w = *verdict.witness;
    os << "spins " << a.str() << ": SCF fails in SO(" << profile.ambient_dim << "): angles "
       << w.p << "/" << w.q << " and " << w.p_prime << "/" << w.q
       << " are nonconjugate rotations with conjugate images\n";
    report.exit_code = kExitFails;
  }
  report.text = os.str();
}

void run_so3_search(const RunConfig& config, Report& report) {
  if (config.sum_max < 1) throw invalid_input("--sum-max must be >= 1");
  report.config =
      json{{"sum_max", config.sum_max}, {"q_max", config.q_max}, {"workers", config.workers}};

  const auto entries = search_open_question(config.sum_max, config.q_max, config.workers);
  for (const auto& e : entries)
    if (!e.verdict.holds() && !verify_witness_so3(e.spins, *e.verdict.witness))
      throw std::runtime_error("internal error: search witness failed re-verification");
  report.verdicts.push_back(search_report_json(entries));
  report.disclaimers.push_back(verdict_disclaimer("rotation-image SCF", config.q_max));

  std::ostringstream os;
  size_t holds = 0;
  for (const auto& e : entries) {
    os << "  " << e.spins.str() << "  ->  ";
    if (e.verdict.holds()) {
      os << "holds (q <= " << e.verdict.searched_bound << ")\n";
      ++holds;
    } else {
      const auto& w = *e.verdict.witness;
      os << "fails (q=" << w.q << ", p=" << w.p << ", p'=" << w.p_prime << ")\n";
    }
  }
  std::ostringstream head;
  head << "classified " << entries.size() << " spin sequences with sum <= " << config.sum_max
       << " (" << holds << " hold up to q_max " << config.q_max << ")\n";
  report.text = head.str() + os.str();
  report.exit_code = kExitHolds;
}

void run_weyl_conj(const RunConfig& config, Report& report) {
  report.config = json{{"x", config.x_text}, {"y", config.y_text}, {"group", config.group_text}};
  const ConjugacyQueryResult result =
      conjugacy_query(config.x_text, config.y_text, config.group_text);
  report.verdicts.push_back(json{{"conjugate", result.conjugate},
                                 {"canonical_x", result.canonical_x},
                                 {"canonical_y", result.canonical_y}});
  std::ostringstream os;
  os << "canonical(x) = " << result.canonical_x.str() << "\n"
     << "canonical(y) = " << result.canonical_y.str() << "\n"
     << (result.conjugate ? "conjugate" : "not conjugate") << " in "
     << group_name(result.canonical_x.group) << "\n";
  report.text = os.str();
  report.exit_code = result.conjugate ? kExitHolds : kExitFails;
}

void run_fusion(const RunConfig& config, Report& report) {
  const GroupTag sub = parse_group_spec(config.sub_text);
  const GroupTag amb = parse_group_spec(config.amb_text);
  report.config = json{{"sub", sub}, {"amb", amb}, {"q", config.torsion_q},
                       {"workers", config.workers}};

  EmbeddingRule rule;
  if (sub == amb) rule = EmbeddingRule::Identity;
  else if (sub.family == GroupFamily::OddOrthogonalB &&
           amb.family == GroupFamily::EvenOrthogonalD && amb.rank == sub.rank + 1)
    rule = EmbeddingRule::AppendZeroTurn;
  else
    throw refusal("no supported torus embedding of " + group_name(sub) + " into " +
                  group_name(amb));

  const bool controls = fusion_elementwise(sub, amb, rule, config.torsion_q, config.workers);
  report.verdicts.push_back(json{{"outcome", controls ? "holds" : "fails"},
                                 {"q", config.torsion_q}});
  std::ostringstream os;
  os << group_name(sub) << " controls elementwise fusion in " << group_name(amb)
     << " for all torsion orders q <= " << config.torsion_q << ": "
     << (controls ? "yes" : "NO") << "\n";
  if (controls)
    report.disclaimers.push_back(verdict_disclaimer("elementwise fusion", config.torsion_q));
  report.text = os.str();
  report.exit_code = controls ? kExitHolds : kExitFails;
}

std::string case_line(const SymPairCase& c) {
  std::ostringstream os;
  os << "  " << c.description << "  ->  "
     << (c.status == ScfStatus::Realizable ? "SCF realizable" : "not SCF");
  if (c.reason) os << " [" << reason_token(*c.reason) << "]";
  if (c.connected_only) os << " (connected H only; disconnected realization exists)";
  return os.str();
}

void run_sympair(const RunConfig& config, Report& report) {
  if (config.list_catalog) {
    report.config = json{{"list", true}};
    std::ostringstream os;
    os << "symmetric-pair SCF catalog:\n";
    for (const SymPairCase& c : catalog()) {
      report.verdicts.push_back(json(c));
      os << case_line(c) << "\n";
    }
    report.text = os.str();
    report.exit_code = kExitHolds;
    return;
  }

  report.config = json{{"family", config.pair_family},
                       {"n", config.n},
                       {"p", config.p},
                       {"q", config.q},
                       {"theta", config.theta}};

  PairParams params{.n = config.n, .p = config.p, .q = config.q};
  PairFamily family;
  if (config.pair_family == "equal-rank-so") {
    family = PairFamily::EqualRank;
    params.kind = EqualRankKind::SoEvenProduct;
  } else if (config.pair_family == "equal-rank-sp") {
    family = PairFamily::EqualRank;
    params.kind = EqualRankKind::SpProduct;
  } else if (config.pair_family == "equal-rank-u") {
    family = PairFamily::EqualRank;
    params.kind = EqualRankKind::UnitaryProduct;
  } else {
    family = family_from_token(config.pair_family);
    if (family == PairFamily::EqualRank) params.kind = EqualRankKind::SoEvenProduct;
  }

  const SymPairCase c = classify_pair(family, params);
  json verdict(c);
  std::ostringstream os;
  os << case_line(c) << "\n";

  // Negative classical cases come with a machine-checked witness.
  if (family == PairFamily::SoSumOdd) {
    const PairWitness w = build_witness_so_sum(params.p, params.q, Turn::parse(config.theta));
    const PairVerification v = verify_pair_witness(w);
    if (!v.ambient_conjugate || v.subgroup_conjugate)
      throw std::runtime_error("internal error: odd-sum witness failed re-verification");
    verdict["witness"] = w;
    verdict["verification"] = v;
    os << "  witness: x = " << w.x.str() << "\n           y = " << w.y.str() << "\n"
       << "  conjugate in the ambient group, not in the subgroup blocks\n";
  } else if (family == PairFamily::EqualRank) {
    SignedPermGroupSpec spec;
    GroupTag ambient = GroupTag::unitary(1);
    switch (params.kind) {
      case EqualRankKind::SoEvenProduct:
        spec = SignedPermGroupSpec::so_even_product(params.p, params.q);
        ambient = GroupTag::so_even(params.p + params.q);
        break;
      case EqualRankKind::SpProduct:
        spec = SignedPermGroupSpec::sp_product(params.p, params.q);
        ambient = GroupTag::symplectic(params.p + params.q);
        break;
      case EqualRankKind::UnitaryProduct:
        spec = SignedPermGroupSpec::unitary_product(params.p, params.q);
        ambient = GroupTag::unitary(params.p + params.q);
        break;
    }
    const PairWitness w = equal_rank_witness(ambient, spec);
    const PairVerification v = verify_pair_witness(w);
    if (!v.ambient_conjugate || v.subgroup_conjugate)
      throw std::runtime_error("internal error: equal-rank witness failed re-verification");
    verdict["witness"] = w;
    verdict["verification"] = v;
    os << "  witness: x = " << w.x.str() << "\n           y = " << w.y.str() << "\n"
       << "  Weyl-regular base point moved outside the subgroup orbit\n";
  }

  report.verdicts.push_back(verdict);
  report.text = os.str();
  report.exit_code = c.status == ScfStatus::Realizable ? kExitHolds : kExitFails;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Circle: return "circle";
    case Command::So3: return "so3";
    case Command::So3Search: return "so3-search";
    case Command::WeylConj: return "weyl-conj";
    case Command::Fusion: return "fusion";
    case Command::Sympair: return "sympair";
  }
  return "?";
}

}  // namespace

json Report::to_json() const {
  return json{{"tool_version", tool_version}, {"command", command},   {"config", config},
              {"verdicts", verdicts},         {"disclaimers", disclaimers},
              {"wall_time_ms", wall_time_ms}, {"exit_code", exit_code}};
}

Report run(const RunConfig& config) {
  if (config.workers < 1) throw invalid_input("--workers must be >= 1");
  Report report;
  report.tool_version = kVersion;
  report.command = command_name(config.command);

  const auto start = std::chrono::steady_clock::now();
  switch (config.command) {
    case Command::Circle: run_circle(config, report); break;
    case Command::So3: run_so3(config, report); break;
    case Command::So3Search: run_so3_search(config, report); break;
    case Command::WeylConj: run_weyl_conj(config, report); break;
    case Command::Fusion: run_fusion(config, report); break;
    case Command::Sympair: run_sympair(config, report); break;
  }
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

ConjugacyQueryResult conjugacy_query(const std::string& x_text, const std::string& y_text,
                                     const std::string& group_text) {
  const TorusElement x = parse_element(x_text, group_text);
  const TorusElement y = parse_element(y_text, group_text);
  if (!(x.group == y.group)) throw invalid_input("group tags of x and y differ");
  ConjugacyQueryResult result;
  result.canonical_x = canonical_form(x);
  result.canonical_y = canonical_form(y);
  result.conjugate = result.canonical_x == result.canonical_y;
  return result;
}

GroupTag parse_group_spec(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed.front() == '{') {
    const json j = json::parse(trimmed, nullptr, false);
    if (j.is_discarded()) throw invalid_input("malformed group JSON: " + text);
    return j.get<GroupTag>();
  }
  const auto tokens = split_tokens(trimmed);
  if (tokens.size() != 2) throw invalid_input("group spec needs a family token and a size");
  int size = 0;
  try {
    size = std::stoi(tokens[1]);
  } catch (const std::exception&) {
    throw invalid_input("bad group size '" + tokens[1] + "'");
  }
  const std::string& fam = tokens[0];
  if (fam == "u") return GroupTag::unitary(size);
  if (fam == "su") return GroupTag::special_unitary(size);
  if (fam == "so") return GroupTag::special_orthogonal(size);
  if (fam == "sp") return GroupTag::symplectic(size);
  if (fam == "o") return GroupTag::orthogonal(size);
  throw invalid_input("unknown group family token '" + fam + "' (use u/su/so/sp/o)");
}

}  // namespace scf::cli
