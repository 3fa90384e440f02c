#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "tcgen/conditions.hpp"
#include "tcgen/genop.hpp"
#include "tcgen/oracle.hpp"

namespace tcgen {

// A parsed instance document: the generator and conorm descriptions plus
// optional metadata. Building the GeneratedOp revalidates everything.
struct InstanceSpec {
  std::optional<std::string> name;
  std::optional<std::string> notes;
  std::vector<AffinePiece> pieces;
  std::map<Q01, Q01> overrides;
  std::vector<Summand> summands;

  GeneratedOp build() const;
  bool operator==(const InstanceSpec& o) const;
};

// Throws ParseError with a JSON-pointer-style location on schema violations;
// builder errors (monotonicity, overlaps) surface as BuildError.
InstanceSpec parse_spec(const nlohmann::json& doc);
InstanceSpec parse_spec_text(const std::string& text);
InstanceSpec load_spec(const std::string& path);

nlohmann::json serialize(const InstanceSpec& spec);

nlohmann::json to_json(const RangeSet& s);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const TripleSequence& t);

}  // namespace tcgen
