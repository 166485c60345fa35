#include "hforest/qorder.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hforest/error.hpp"

namespace hforest {

QOrder::QOrder(std::vector<std::string> labels,
               const std::vector<std::pair<std::string, std::string>>& generators)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j])
        throw validation_error("duplicate label declaration: " + labels_[i]);

  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [p, r] : generators) leq_[index(p) * n + index(r)] = 1;

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
}

bool QOrder::has_label(std::string_view label) const {
  for (const std::string& l : labels_)
    if (l == label) return true;
  return false;
}

std::size_t QOrder::index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw validation_error("undeclared label: " + std::string(label));
}

bool QOrder::dominates(std::span<const std::string> S, std::span<const std::string> R) const {
  if (S.empty() || R.empty()) throw validation_error("dominates requires nonempty label sets");
  for (const std::string& s : S) {
    bool covered = false;
    for (const std::string& r : R)
      if (leq(s, r)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

QOrder QOrder::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid Q-order document: ") + e.what(),
                      static_cast<std::size_t>(e.byte));
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array())
    throw validation_error("Q-order document must have a \"labels\" array");

  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw validation_error("Q-order labels must be strings");
    labels.push_back(l.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> generators;
  if (doc.contains("leq")) {
    if (!doc["leq"].is_array())
      throw validation_error("Q-order \"leq\" must be an array of label pairs");
    for (const auto& pair : doc["leq"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw validation_error("each \"leq\" entry must be a two-element label array");
      generators.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return QOrder(std::move(labels), generators);
}

QOrder QOrder::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open Q-order file: " + path, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

std::string QOrder::to_json_text() const {
  nlohmann::json doc;
  doc["labels"] = labels_;
  auto pairs = nlohmann::json::array();
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[i * n + j]) pairs.push_back({labels_[i], labels_[j]});
  doc["leq"] = pairs;
  return doc.dump(2) + "\n";
}

}  // namespace hforest
