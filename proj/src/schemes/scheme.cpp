#include "caromlab/schemes/scheme.hpp"

namespace caromlab::schemes {

namespace {

nlohmann::json bits_to_json(const Bits& b) {
  return nlohmann::json{{"hex", b.hex()}, {"width", b.width()}};
}

Bits bits_from_json(const nlohmann::json& j) {
  return Bits::from_hex(j.at("hex").get<std::string>(),
                        j.at("width").get<int>());
}

}  // namespace

nlohmann::json ProtectedState::to_json() const {
  nlohmann::json j;
  if (quantum) {
    nlohmann::json amps = nlohmann::json::array();
    for (Eigen::Index i = 0; i < quantum->dim(); ++i) {
      const auto& a = quantum->amplitudes()(i);
      amps.push_back(nlohmann::json::array({a.real(), a.imag()}));
    }
    j["quantum"] = nlohmann::json{{"qubits", quantum->qubits()},
                                  {"amplitudes", amps}};
  }
  nlohmann::json fields_j = nlohmann::json::object();
  for (const auto& [k, v] : fields) fields_j[k] = bits_to_json(v);
  j["fields"] = fields_j;
  nlohmann::json tables_j = nlohmann::json::object();
  for (const auto& [k, tab] : tables) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Bits& b : tab) arr.push_back(bits_to_json(b));
    tables_j[k] = arr;
  }
  j["tables"] = tables_j;
  j["counters"] = counters;
  return j;
}

ProtectedState ProtectedState::from_json(const nlohmann::json& j) {
  ProtectedState s;
  if (j.contains("quantum")) {
    const auto& q = j.at("quantum");
    int n = q.at("qubits").get<int>();
    const auto& amps = q.at("amplitudes");
    qsim::Vector v(Eigen::Index{1} << n);
    if (static_cast<Eigen::Index>(amps.size()) != v.size()) {
      throw std::invalid_argument("ProtectedState: amplitude count mismatch");
    }
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const auto& pair = amps[static_cast<std::size_t>(i)];
      v(i) = qsim::Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    s.quantum = qsim::PureState::from_amplitudes(std::move(v));
  }
  for (const auto& [k, v] : j.at("fields").items()) {
    s.fields.emplace(k, bits_from_json(v));
  }
  for (const auto& [k, arr] : j.at("tables").items()) {
    std::vector<Bits> tab;
    for (const auto& v : arr) tab.push_back(bits_from_json(v));
    s.tables.emplace(k, std::move(tab));
  }
  s.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
  return s;
}

Bits Scheme::sample_input(Rng& rng) const { return rng.bits(info_.input_bits); }

Bits Scheme::sample_challenge(const Bits&, Rng& rng) const {
  return rng.bits(info_.input_bits);
}

}  // namespace caromlab::schemes
