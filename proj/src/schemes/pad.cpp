#include "caromlab/schemes/pad.hpp"

namespace caromlab::schemes {

namespace {

int bits_for(std::uint64_t max_value) {
  int b = 1;
  while ((max_value >> b) != 0) ++b;
  return b;
}

}  // namespace

PadScheme::PadScheme(const PadParams& p)
    : p_(p), idx_bits_(bits_for(static_cast<std::uint64_t>(p.pad_size))) {
  if (p.pad_size < 1) throw std::invalid_argument("PadScheme: pad_size >= 1");
  info_.name = "pad";
  info_.lambda = p.lambda;
  info_.cp_query_bound = p.pad_size;
  info_.eval_query_bound = 1;
  info_.l_in = p.key_bits + idx_bits_;
  info_.l_out = p.output_bits;
  info_.input_bits = p.input_bits;
  info_.output_bits = p.output_bits;
  info_.classical = true;
  info_.params = {{"lambda", p.lambda},       {"pad_size", p.pad_size},
                  {"key_bits", p.key_bits},   {"input_bits", p.input_bits},
                  {"output_bits", p.output_bits}};
}

Bits PadScheme::sample_function(Rng& rng) const { return rng.bits(p_.lambda); }

Bits PadScheme::truth(const Bits& d_f, const Bits& x) const {
  std::uint64_t mixed = mix64(d_f.value(), x.value());
  return Bits(mixed & ((1ULL << p_.output_bits) - 1), p_.output_bits);
}

Bits PadScheme::pad_point(const Bits& key, std::uint64_t index) const {
  return Bits::concat(key, Bits(index, idx_bits_));
}

ProtectedState PadScheme::cp(const Bits& d_f, oracle::OracleHandle& o,
                             Rng& rng) const {
  Bits key = rng.bits(p_.key_bits);
  std::vector<Bits> pad;
  pad.reserve(static_cast<std::size_t>(p_.pad_size));
  for (int i = 0; i < p_.pad_size; ++i) {
    pad.push_back(o.answer(pad_point(key, static_cast<std::uint64_t>(i))));
  }
  std::vector<Bits> mask;
  std::uint64_t domain = 1ULL << p_.input_bits;
  mask.reserve(domain);
  for (std::uint64_t x = 0; x < domain; ++x) {
    Bits xb(x, p_.input_bits);
    std::uint64_t h = x % static_cast<std::uint64_t>(p_.pad_size);
    mask.push_back(truth(d_f, xb) ^ pad[h]);
  }
  ProtectedState state;
  state.fields.emplace("key", key);
  state.tables.emplace("mask", std::move(mask));
  return state;
}

std::pair<ProtectedState, Bits> PadScheme::eval(ProtectedState state,
                                                const Bits& x,
                                                oracle::OracleHandle& o,
                                                Rng&) const {
  if (x.width() != p_.input_bits) {
    throw std::invalid_argument("PadScheme::eval: input width mismatch");
  }
  const Bits& key = state.fields.at("key");
  std::uint64_t h = x.value() % static_cast<std::uint64_t>(p_.pad_size);
  Bits pad = o.answer(pad_point(key, h));
  Bits y = state.tables.at("mask")[x.value()] ^ pad;
  return {std::move(state), y};
}

}  // namespace caromlab::schemes
