#include "scf/group.hpp"

namespace scf {

std::uint64_t weyl_order(const GroupTag& tag) {
  const int n = tag.rank;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  switch (tag.family) {
    case GroupFamily::UnitaryA:
    case GroupFamily::SpecialUnitaryA:
      return fact;
    case GroupFamily::OddOrthogonalB:
    case GroupFamily::SymplecticC:
    case GroupFamily::FullOrthogonal:
      return fact << n;
    case GroupFamily::EvenOrthogonalD:
      return fact << (n - 1);
  }
  throw invalid_input("unknown group family");
}

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::UnitaryA: return "UnitaryA";
    case GroupFamily::SpecialUnitaryA: return "SpecialUnitaryA";
    case GroupFamily::OddOrthogonalB: return "OddOrthogonalB";
    case GroupFamily::SymplecticC: return "SymplecticC";
    case GroupFamily::EvenOrthogonalD: return "EvenOrthogonalD";
    case GroupFamily::FullOrthogonal: return "FullOrthogonal";
  }
  throw invalid_input("unknown group family");
}

GroupFamily family_from_name(const std::string& name) {
  if (name == "UnitaryA") return GroupFamily::UnitaryA;
  if (name == "SpecialUnitaryA") return GroupFamily::SpecialUnitaryA;
  if (name == "OddOrthogonalB") return GroupFamily::OddOrthogonalB;
  if (name == "SymplecticC") return GroupFamily::SymplecticC;
  if (name == "EvenOrthogonalD") return GroupFamily::EvenOrthogonalD;
  if (name == "FullOrthogonal") return GroupFamily::FullOrthogonal;
  throw invalid_input("unknown group family '" + name + "'");
}

std::string group_name(const GroupTag& tag) {
  switch (tag.family) {
    case GroupFamily::UnitaryA: return "U(" + std::to_string(tag.rank) + ")";
    case GroupFamily::SpecialUnitaryA: return "SU(" + std::to_string(tag.rank) + ")";
    case GroupFamily::OddOrthogonalB: return "SO(" + std::to_string(2 * tag.rank + 1) + ")";
    case GroupFamily::SymplecticC: return "Sp(" + std::to_string(tag.rank) + ")";
    case GroupFamily::EvenOrthogonalD: return "SO(" + std::to_string(2 * tag.rank) + ")";
    case GroupFamily::FullOrthogonal: return "O(" + std::to_string(tag.size) + ")";
  }
  throw invalid_input("unknown group family");
}

}  // namespace scf
