#include "asimkit/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asimkit/error.hpp"

namespace asimkit {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_document(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
}

const std::string& as_string(const json& value, const char* what) {
  if (!value.is_string()) throw ModelError(std::string(what) + " must be a string");
  return value.get_ref<const std::string&>();
}

const json& as_array(const json& value, const char* what) {
  if (!value.is_array()) throw ModelError(std::string(what) + " must be an array");
  return value;
}

int letter_from_key(const std::string& key) {
  int value = 0;
  if (key.size() < 2 || key[0] != 'P') throw ModelError("valuation key '" + key + "' is not of the form P<n>");
  const char* first = key.data() + 1;
  const char* last = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 1) {
    throw ModelError("valuation key '" + key + "' is not of the form P<n>");
  }
  return value;
}

}  // namespace

PointedModel LoadedModel::pointed() const {
  if (!point) throw ModelError("the model document has no \"point\"");
  return PointedModel(model, *point);
}

LoadedModel load_model(std::string_view document) {
  const json doc = parse_document(document);
  if (!doc.is_object()) throw ModelError("a model document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "vocab" && key != "worlds" && key != "rel" && key != "val" && key != "point") {
      throw ModelError("unknown field \"" + key + "\" in model document");
    }
  }
  for (const char* required : {"vocab", "worlds", "rel", "val"}) {
    if (!doc.contains(required)) throw ModelError(std::string("missing field \"") + required + "\"");
  }

  ModelSpec spec;
  for (const auto& letter : as_array(doc["vocab"], "\"vocab\"")) {
    if (!letter.is_number_integer() || letter.get<long long>() < 1) {
      throw ModelError("\"vocab\" entries must be positive integers");
    }
    spec.vocab.insert(static_cast<int>(letter.get<long long>()));
  }
  for (const auto& world : as_array(doc["worlds"], "\"worlds\"")) {
    spec.worlds.push_back(as_string(world, "world names"));
  }
  for (const auto& edge : as_array(doc["rel"], "\"rel\"")) {
    if (!edge.is_array() || edge.size() != 2) throw ModelError("\"rel\" entries must be [from, to] pairs");
    spec.rel.emplace_back(as_string(edge[0], "\"rel\" endpoints"), as_string(edge[1], "\"rel\" endpoints"));
  }
  const json& val = doc["val"];
  if (!val.is_object()) throw ModelError("\"val\" must be an object");
  for (const auto& [key, members] : val.items()) {
    const int letter = letter_from_key(key);
    auto& names = spec.val[letter];
    for (const auto& name : as_array(members, "valuations")) names.push_back(as_string(name, "valuation members"));
  }

  LoadedModel out;
  auto model = std::make_shared<const Model>(spec);
  if (doc.contains("point")) out.point = model->at(as_string(doc["point"], "\"point\""));
  out.model = std::move(model);
  return out;
}

LoadedModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return load_model(buffer.str());
  } catch (const ModelError& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

std::vector<LoadedModel> load_model_directory(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory)) throw ModelError(directory.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<LoadedModel> out;
  for (const auto& file : files) out.push_back(load_model_file(file));
  return out;
}

std::string model_document(const Model& model, std::optional<World> point) {
  ordered_json doc;
  doc["vocab"] = ordered_json::array();
  for (int letter : model.vocab()) doc["vocab"].push_back(letter);
  doc["worlds"] = ordered_json::array();
  for (World w : model.worlds()) doc["worlds"].push_back(model.name(w));
  doc["rel"] = ordered_json::array();
  for (auto [u, v] : model.edges()) doc["rel"].push_back({model.name(u), model.name(v)});
  doc["val"] = ordered_json::object();
  for (int letter : model.vocab()) {
    auto& members = doc["val"]["P" + std::to_string(letter)];
    members = ordered_json::array();
    for (World w : model.extension(letter)) members.push_back(model.name(w));
  }
  if (point) doc["point"] = model.name(*point);
  return doc.dump();
}

std::string model_dot(const Model& model, std::optional<World> point) {
  std::ostringstream out;
  out << "digraph model {\n";
  for (World w : model.worlds()) {
    std::string label = model.name(w);
    std::vector<std::string> letters;
    for (int letter : model.vocab()) {
      if (model.satisfies(letter, w)) letters.push_back("P" + std::to_string(letter));
    }
    if (!letters.empty()) {
      label += "\\n";
      for (std::size_t i = 0; i < letters.size(); ++i) label += (i ? "," : "") + letters[i];
    }
    out << "  \"" << model.name(w) << "\" [label=\"" << label << "\""
        << (point && *point == w ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  for (auto [u, v] : model.edges()) out << "  \"" << model.name(u) << "\" -> \"" << model.name(v) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace asimkit
