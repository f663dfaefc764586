#include "pipp/model_json.hpp"

#include <fstream>

#include "pipp/errors.hpp"

namespace pipp {

using nlohmann::json;

json model_to_json(const PairwiseInteraction& model) {
  return json{{"family", std::string(to_string(model.family()))},
              {"gamma", model.gamma()},
              {"radii", model.radii()},
              {"hardcore", model.hardcore()},
              {"dim", model.dim()}};
}

PairwiseInteraction model_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ConfigError("model must be a JSON object");
    for (const char* key : {"family", "gamma", "radii"})
      if (!j.contains(key))
        throw ConfigError(std::string("model is missing \"") + key + "\"");
    const Family family = family_from_string(j.at("family").get<std::string>());
    auto gamma = j.at("gamma").get<std::vector<double>>();
    auto radii = j.at("radii").get<std::vector<double>>();
    const double hardcore = j.value("hardcore", 0.0);
    const int dim = j.value("dim", 2);
    return PairwiseInteraction(family, std::move(gamma), std::move(radii),
                               hardcore, dim);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed model: ") + e.what());
  }
}

json box_to_json(const Box& box) {
  return json{{"lower", box.lower()}, {"upper", box.upper()}};
}

Box box_from_json(const json& j) {
  try {
    return Box(j.at("lower").get<std::vector<double>>(),
               j.at("upper").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed window: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace pipp
