#include "caromlab/schemes/counter.hpp"

namespace caromlab::schemes {

namespace {
constexpr int kIndexBits = 16;
}

CounterScheme::CounterScheme(const CounterParams& p) : p_(p) {
  if (p.cp_points < 0) throw std::invalid_argument("CounterScheme: M >= 0");
  if (p.queries_per_eval < 1) {
    throw std::invalid_argument("CounterScheme: queries_per_eval >= 1");
  }
  info_.name = "counter";
  info_.lambda = p.lambda;
  info_.cp_query_bound = p.cp_points;
  info_.eval_query_bound = p.queries_per_eval;
  info_.l_in = p.key_bits + kIndexBits;
  info_.l_out = p.output_bits;
  info_.input_bits = p.input_bits;
  info_.output_bits = p.output_bits;
  info_.classical = true;
  info_.params = {{"lambda", p.lambda},
                  {"cp_points", p.cp_points},
                  {"key_bits", p.key_bits},
                  {"input_bits", p.input_bits},
                  {"output_bits", p.output_bits},
                  {"queries_per_eval", p.queries_per_eval}};
}

Bits CounterScheme::sample_function(Rng& rng) const {
  return rng.bits(p_.lambda);
}

Bits CounterScheme::truth(const Bits& d_f, const Bits& x) const {
  std::uint64_t mixed = mix64(d_f.value() ^ 0x5851F42D4C957F2DULL, x.value());
  return Bits(mixed & ((1ULL << p_.output_bits) - 1), p_.output_bits);
}

Bits CounterScheme::point(const Bits& key, std::uint64_t index) const {
  return Bits::concat(key, Bits(index & 0xFFFF, kIndexBits));
}

ProtectedState CounterScheme::cp(const Bits& d_f, oracle::OracleHandle& o,
                                 Rng& rng) const {
  Bits key = rng.bits(p_.key_bits);
  // check[i-1] = O(key || i), consumed by Eval's i-th query.
  std::vector<Bits> check;
  check.reserve(static_cast<std::size_t>(p_.cp_points));
  for (int i = 1; i <= p_.cp_points; ++i) {
    check.push_back(o.answer(point(key, static_cast<std::uint64_t>(i))));
  }
  std::vector<Bits> table;
  std::uint64_t domain = 1ULL << p_.input_bits;
  table.reserve(domain);
  for (std::uint64_t x = 0; x < domain; ++x) {
    table.push_back(truth(d_f, Bits(x, p_.input_bits)));
  }
  ProtectedState state;
  state.fields.emplace("key", key);
  state.tables.emplace("check", std::move(check));
  state.tables.emplace("table", std::move(table));
  state.counters.emplace("counter", 0);
  return state;
}

std::pair<ProtectedState, Bits> CounterScheme::eval(ProtectedState state,
                                                    const Bits& x,
                                                    oracle::OracleHandle& o,
                                                    Rng&) const {
  if (x.width() != p_.input_bits) {
    throw std::invalid_argument("CounterScheme::eval: input width mismatch");
  }
  const Bits& key = state.fields.at("key");
  const auto& check = state.tables.at("check");
  std::uint64_t counter = state.counters.at("counter");
  Bits unmask(0, p_.output_bits);
  for (int t = 1; t <= p_.queries_per_eval; ++t) {
    std::uint64_t idx = counter + static_cast<std::uint64_t>(t);
    Bits a = o.answer(point(key, idx));
    Bits expected = idx <= static_cast<std::uint64_t>(p_.cp_points)
                        ? check[static_cast<std::size_t>(idx - 1)]
                        : Bits(0, p_.output_bits);
    unmask = unmask ^ a ^ expected;
  }
  state.counters.at("counter") =
      counter + static_cast<std::uint64_t>(p_.queries_per_eval);
  Bits y = state.tables.at("table")[x.value()] ^ unmask;
  return {std::move(state), y};
}

}  // namespace caromlab::schemes
