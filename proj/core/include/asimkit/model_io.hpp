#pragma once

// Model documents (JSON):
//
//   {"vocab":[1], "worlds":["a","b","c"], "rel":[["a","b"],["a","c"]],
//    "val":{"P1":["c"]}, "point":"a"}
//
// "point" is optional; all other fields are required and unknown fields are
// rejected.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asimkit/model.hpp"

namespace asimkit {

struct LoadedModel {
  std::shared_ptr<const Model> model;
  std::optional<World> point;

  // Throws ModelError when the document carried no point.
  [[nodiscard]] PointedModel pointed() const;
};

// Throws ModelError on malformed documents.
[[nodiscard]] LoadedModel load_model(std::string_view document);
[[nodiscard]] LoadedModel load_model_file(const std::filesystem::path& path);

// Loads every *.json model in a directory, in file-name order.
[[nodiscard]] std::vector<LoadedModel> load_model_directory(const std::filesystem::path& directory);

[[nodiscard]] std::string model_document(const Model& model, std::optional<World> point = std::nullopt);

// Graphviz rendering; the point, when given, is drawn with a double circle.
[[nodiscard]] std::string model_dot(const Model& model, std::optional<World> point = std::nullopt);

}  // namespace asimkit
