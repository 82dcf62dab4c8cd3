#include "scf/json_io.hpp"

namespace scf {

using nlohmann::json;

void to_json(json& j, const GroupTag& tag) {
  j = json{{"family", family_name(tag.family)}, {"rank", tag.rank}};
  if (tag.family == GroupFamily::FullOrthogonal) j["size"] = tag.size;
}

void from_json(const json& j, GroupTag& tag) {
  try {
    GroupTag t;
    t.family = family_from_name(j.at("family").get<std::string>());
    t.rank = j.at("rank").get<int>();
    if (t.family == GroupFamily::FullOrthogonal)
      t.size = j.contains("size") ? j.at("size").get<int>() : 2 * t.rank;
    else
      t.size = t.family == GroupFamily::OddOrthogonalB ? 2 * t.rank + 1
             : t.family == GroupFamily::EvenOrthogonalD || t.family == GroupFamily::SymplecticC
                 ? 2 * t.rank
                 : t.rank;
    tag = GroupTag::checked(t);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad group tag: ") + e.what());
  }
}

namespace {

json turns_json(const std::vector<Turn>& turns) {
  json arr = json::array();
  for (const Turn& t : turns) arr.push_back(t.str());
  return arr;
}

std::vector<Turn> turns_from_json(const json& arr) {
  if (!arr.is_array()) throw invalid_input("turns must be a JSON array of \"p/q\" strings");
  std::vector<Turn> turns;
  for (const auto& item : arr) {
    if (!item.is_string()) throw invalid_input("turns must be \"p/q\" strings");
    turns.push_back(Turn::parse(item.get<std::string>()));
  }
  return turns;
}

}  // namespace

void to_json(json& j, const TorusElement& x) {
  j = json{{"turns", turns_json(x.turns)}, {"group", x.group}};
}

TorusElement torus_element_from_json(const json& j) {
  try {
    return TorusElement(turns_from_json(j.at("turns")), j.at("group").get<GroupTag>());
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad torus element: ") + e.what());
  }
}

void to_json(json& j, const CanonicalForm& cf) {
  j = json{{"turns", turns_json(cf.turns)}, {"group", cf.group}};
  if (cf.chirality) j["chirality"] = *cf.chirality == Parity::Odd ? "odd" : "even";
}

void to_json(json& j, const CongruenceWitness& w) {
  j = json{{"m", w.m}, {"k", w.k}, {"permutation", w.permutation}};
}

void from_json(const json& j, CongruenceWitness& w) {
  try {
    w.m = j.at("m").get<std::int64_t>();
    w.k = j.at("k").get<std::int64_t>();
    w.permutation = j.at("permutation").get<std::vector<size_t>>();
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad congruence witness: ") + e.what());
  }
}

json circle_verdict_json(const CircleVerdict& v) {
  if (v.holds()) return json{{"outcome", "holds"}, {"bound", v.searched_bound}};
  return json{{"outcome", "fails"},
              {"m", v.witness->m},
              {"k", v.witness->k},
              {"permutation", v.witness->permutation}};
}

void to_json(json& j, const So3Witness& w) {
  j = json{{"q", w.q}, {"p", w.p}, {"p_prime", w.p_prime}};
}

void from_json(const json& j, So3Witness& w) {
  try {
    w.q = j.at("q").get<std::int64_t>();
    w.p = j.at("p").get<std::int64_t>();
    w.p_prime = j.at("p_prime").get<std::int64_t>();
  } catch (const json::exception& e) {
    throw invalid_input(std::string("bad rotation witness: ") + e.what());
  }
}

json so3_verdict_json(const So3Verdict& v) {
  if (v.holds()) return json{{"outcome", "holds"}, {"bound", v.searched_bound}};
  return json{{"outcome", "fails"},
              {"q", v.witness->q},
              {"p", v.witness->p},
              {"p_prime", v.witness->p_prime}};
}

json search_report_json(const std::vector<So3SearchEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries)
    arr.push_back(json{{"spins", e.spins.spins}, {"outcome", so3_verdict_json(e.verdict)}});
  return arr;
}

void to_json(json& j, const SymPairCase& c) {
  j = json{{"family", family_token(c.family)},
           {"description", c.description},
           {"status", c.status == ScfStatus::Realizable ? "scf-realizable" : "not-scf"}};
  json params = json::object();
  if (c.params.n) params["n"] = c.params.n;
  if (c.params.p) params["p"] = c.params.p;
  if (c.params.q) params["q"] = c.params.q;
  if (!params.empty()) j["params"] = params;
  if (c.reason) j["reason"] = reason_token(*c.reason);
  if (c.connected_only) j["connected_only"] = true;
}

void to_json(json& j, const PairWitness& w) {
  json blocks = json::array();
  for (const SubBlock& b : w.blocks)
    blocks.push_back(json{{"group", b.tag}, {"offset", b.offset}});
  j = json{{"x", w.x}, {"y", w.y}, {"blocks", blocks}};
}

void to_json(json& j, const PairVerification& v) {
  j = json{{"ambient_conjugate", v.ambient_conjugate},
           {"subgroup_conjugate", v.subgroup_conjugate}};
}

}  // namespace scf
