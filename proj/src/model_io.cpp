#include "infoaging/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace infoaging {

ArModel parse_model_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_model, std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::invalid_model, "model file must be a JSON object");

  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "coeffs" && key != "sigma2_w" && key != "sigma2_n")
      throw Error(ErrorCode::invalid_model, "unknown field '" + key + "' in model file");
  }
  for (const char* key : {"coeffs", "sigma2_w", "sigma2_n"})
    if (!doc.contains(key))
      throw Error(ErrorCode::invalid_model, std::string("missing field '") + key + "'");

  if (!doc["coeffs"].is_array() || doc["coeffs"].empty())
    throw Error(ErrorCode::invalid_model, "'coeffs' must be a non-empty array");
  ArModel model;
  for (const auto& v : doc["coeffs"]) {
    if (!v.is_number())
      throw Error(ErrorCode::invalid_model, "'coeffs' entries must be numbers");
    model.coeffs.push_back(v.get<double>());
  }
  for (const char* key : {"sigma2_w", "sigma2_n"})
    if (!doc[key].is_number())
      throw Error(ErrorCode::invalid_model, std::string("'") + key + "' must be a number");
  model.sigma2_w = doc["sigma2_w"].get<double>();
  model.sigma2_n = doc["sigma2_n"].get<double>();
  return model;
}

ArModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::invalid_model, "cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

}  // namespace infoaging
