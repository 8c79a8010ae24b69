#include "asimkit/simulation_io.hpp"

#include <json.hpp>

#include "asimkit/error.hpp"

namespace asimkit {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& pair_list(const json& doc) {
  if (!doc.is_object()) throw ModelError("a relation document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "pairs") throw ModelError("unknown field \"" + key + "\" in relation document");
  }
  if (!doc.contains("pairs") || !doc["pairs"].is_array()) throw ModelError("missing \"pairs\" array");
  return doc["pairs"];
}

json parse(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
}

void check_fields(const json& entry, std::initializer_list<const char*> allowed) {
  if (!entry.is_object()) throw ModelError("relation entries must be objects");
  for (const auto& [key, value] : entry.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) throw ModelError("unknown field \"" + key + "\" in relation entry");
  }
}

Direction direction_of(const json& entry, bool optional) {
  if (!entry.contains("dir")) {
    if (optional) return Direction::LeftToRight;
    throw ModelError("relation entry without \"dir\"");
  }
  const json& dir = entry["dir"];
  if (dir == "LR") return Direction::LeftToRight;
  if (dir == "RL") return Direction::RightToLeft;
  throw ModelError("\"dir\" must be \"LR\" or \"RL\"");
}

const Model& source(Direction dir, const Model& left, const Model& right) {
  return dir == Direction::LeftToRight ? left : right;
}

const Model& target(Direction dir, const Model& left, const Model& right) {
  return dir == Direction::LeftToRight ? right : left;
}

World world_field(const json& entry, const char* field, const Model& model) {
  if (!entry.contains(field) || !entry[field].is_string()) {
    throw ModelError(std::string("relation entry needs a string \"") + field + "\"");
  }
  return model.at(entry[field].get<std::string>());
}

std::vector<World> sequence_field(const json& entry, const char* field, const Model& model) {
  if (!entry.contains(field) || !entry[field].is_array()) {
    throw ModelError(std::string("relation entry needs an array \"") + field + "\"");
  }
  std::vector<World> out;
  for (const auto& name : entry[field]) {
    if (!name.is_string()) throw ModelError(std::string("\"") + field + "\" entries must be world names");
    out.push_back(model.at(name.get<std::string>()));
  }
  return out;
}

const char* tag(Direction dir) { return dir == Direction::LeftToRight ? "LR" : "RL"; }

ordered_json names(const std::vector<World>& worlds, const Model& model) {
  ordered_json out = ordered_json::array();
  for (World w : worlds) out.push_back(model.name(w));
  return out;
}

}  // namespace

bool is_tuple_document(std::string_view document) {
  const json doc = parse(document);
  for (const auto& entry : pair_list(doc)) {
    if (entry.is_object() && (entry.contains("fromSeq") || entry.contains("toSeq"))) return true;
  }
  return false;
}

DirectedRelation load_directed_relation(std::string_view document, const Model& left, const Model& right) {
  const json doc = parse(document);
  DirectedRelation out(left.size(), right.size());
  for (const auto& entry : pair_list(doc)) {
    check_fields(entry, {"dir", "from", "to"});
    const Direction dir = direction_of(entry, false);
    out.insert(dir, world_field(entry, "from", source(dir, left, right)),
               world_field(entry, "to", target(dir, left, right)));
  }
  return out;
}

TupleRelation load_tuple_relation(std::string_view document, const Model& left, const Model& right) {
  const json doc = parse(document);
  TupleRelation out;
  for (const auto& entry : pair_list(doc)) {
    check_fields(entry, {"dir", "from", "to", "fromSeq", "toSeq"});
    const Direction dir = direction_of(entry, false);
    const Model& src = source(dir, left, right);
    const Model& tgt = target(dir, left, right);
    TuplePair pair{dir, {}, {}};
    if (entry.contains("fromSeq") || entry.contains("toSeq")) {
      pair.from = sequence_field(entry, "fromSeq", src);
      pair.to = sequence_field(entry, "toSeq", tgt);
    } else {
      pair.from = {world_field(entry, "from", src)};
      pair.to = {world_field(entry, "to", tgt)};
    }
    if (pair.from.empty() || pair.from.size() != pair.to.size()) {
      throw ModelError("\"fromSeq\" and \"toSeq\" must be nonempty and of equal length");
    }
    out.insert(std::move(pair));
  }
  return out;
}

WorldRelation load_world_relation(std::string_view document, const Model& left, const Model& right) {
  const json doc = parse(document);
  WorldRelation out(left.size(), right.size());
  for (const auto& entry : pair_list(doc)) {
    check_fields(entry, {"dir", "from", "to"});
    if (direction_of(entry, true) != Direction::LeftToRight) {
      throw ModelError("bisimulation entries are left-to-right only");
    }
    out.insert(world_field(entry, "from", left), world_field(entry, "to", right));
  }
  return out;
}

std::string relation_document(const DirectedRelation& relation, const Model& left, const Model& right) {
  ordered_json doc;
  doc["pairs"] = ordered_json::array();
  for (const auto& [dir, from, to] : relation.pairs()) {
    doc["pairs"].push_back({{"dir", tag(dir)},
                            {"from", source(dir, left, right).name(from)},
                            {"to", target(dir, left, right).name(to)}});
  }
  return doc.dump();
}

std::string relation_document(const TupleRelation& relation, const Model& left, const Model& right) {
  ordered_json doc;
  doc["pairs"] = ordered_json::array();
  for (const auto& pair : relation) {
    doc["pairs"].push_back({{"dir", tag(pair.dir)},
                            {"fromSeq", names(pair.from, source(pair.dir, left, right))},
                            {"toSeq", names(pair.to, target(pair.dir, left, right))}});
  }
  return doc.dump();
}

std::string relation_document(const WorldRelation& relation, const Model& left, const Model& right) {
  ordered_json doc;
  doc["pairs"] = ordered_json::array();
  for (auto [l, r] : relation.pairs()) {
    doc["pairs"].push_back({{"from", left.name(l)}, {"to", right.name(r)}});
  }
  return doc.dump();
}

}  // namespace asimkit
