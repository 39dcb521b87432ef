#include "caromlab/schemes/registry.hpp"

#include "caromlab/schemes/conjugate.hpp"
#include "caromlab/schemes/counter.hpp"
#include "caromlab/schemes/pad.hpp"

namespace caromlab::schemes {

namespace {

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

}  // namespace

std::unique_ptr<Scheme> make_scheme(const nlohmann::json& config) {
  std::string name = config.at("name").get<std::string>();
  if (name == "pad") {
    PadParams p;
    p.lambda = get_or(config, "lambda", p.lambda);
    p.pad_size = get_or(config, "pad_size", p.pad_size);
    p.key_bits = get_or(config, "key_bits", p.key_bits);
    p.input_bits = get_or(config, "input_bits", p.input_bits);
    p.output_bits = get_or(config, "output_bits", p.output_bits);
    return std::make_unique<PadScheme>(p);
  }
  if (name == "counter") {
    CounterParams p;
    p.lambda = get_or(config, "lambda", p.lambda);
    p.cp_points = get_or(config, "cp_points", p.cp_points);
    p.key_bits = get_or(config, "key_bits", p.key_bits);
    p.input_bits = get_or(config, "input_bits", p.input_bits);
    p.output_bits = get_or(config, "output_bits", p.output_bits);
    p.queries_per_eval = get_or(config, "queries_per_eval", p.queries_per_eval);
    return std::make_unique<CounterScheme>(p);
  }
  if (name == "conjugate") {
    ConjugateParams p;
    p.lambda = get_or(config, "lambda", p.lambda);
    p.key_qubits = get_or(config, "key_qubits", p.key_qubits);
    p.canary_qubits = get_or(config, "canary_qubits", p.canary_qubits);
    p.input_bits = get_or(config, "input_bits", p.input_bits);
    p.output_bits = get_or(config, "output_bits", p.output_bits);
    p.eps_dist = get_or(config, "eps_dist", p.eps_dist);
    return std::make_unique<ConjugateScheme>(p);
  }
  throw std::invalid_argument("make_scheme: unknown scheme '" + name + "'");
}

std::vector<std::string> scheme_names() { return {"pad", "counter", "conjugate"}; }

}  // namespace caromlab::schemes
