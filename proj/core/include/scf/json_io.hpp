#pragma once

#include <nlohmann/json.hpp>

#include "scf/circle.hpp"
#include "scf/so3.hpp"
#include "scf/sympair.hpp"
#include "scf/torus.hpp"

// Wire formats. Torus elements are {"turns": ["p/q", ...], "group":
// {"family": "...", "rank": n}} with turns in lowest terms; canonical forms
// add an optional "chirality". Verdicts are {"outcome": "holds", "bound": M}
// or {"outcome": "fails", ...witness fields...}.

namespace scf {

void to_json(nlohmann::json& j, const GroupTag& tag);
void from_json(const nlohmann::json& j, GroupTag& tag);

void to_json(nlohmann::json& j, const TorusElement& x);
TorusElement torus_element_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const CanonicalForm& cf);

void to_json(nlohmann::json& j, const CongruenceWitness& w);
void from_json(const nlohmann::json& j, CongruenceWitness& w);
nlohmann::json circle_verdict_json(const CircleVerdict& v);

void to_json(nlohmann::json& j, const So3Witness& w);
void from_json(const nlohmann::json& j, So3Witness& w);
nlohmann::json so3_verdict_json(const So3Verdict& v);

nlohmann::json search_report_json(const std::vector<So3SearchEntry>& entries);

void to_json(nlohmann::json& j, const SymPairCase& c);
void to_json(nlohmann::json& j, const PairWitness& w);
void to_json(nlohmann::json& j, const PairVerification& v);

}  // namespace scf
