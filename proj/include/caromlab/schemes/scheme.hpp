// The copy-protection scheme interface: CP produces a protected program state
// for a function, Eval computes the function from it with oracle access.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "caromlab/oracle/oracle.hpp"
#include "caromlab/qsim/state.hpp"

namespace caromlab::schemes {

// A protected program: an optional quantum part plus classical side data
// (fixed-width strings, tables indexed by value, counters).
struct ProtectedState {
  std::optional<qsim::PureState> quantum;
  std::map<std::string, Bits> fields;
  std::map<std::string, std::vector<Bits>> tables;
  std::map<std::string, std::uint64_t> counters;

  nlohmann::json to_json() const;
  static ProtectedState from_json(const nlohmann::json& j);
};

struct SchemeInfo {
  std::string name;
  int lambda = 0;
  int cp_query_bound = 0;    // M
  int eval_query_bound = 0;  // N
  int l_in = 0;              // oracle input width
  int l_out = 0;             // oracle output width
  int input_bits = 0;        // |X| = 2^input_bits
  int output_bits = 0;       // |Y| = 2^output_bits
  bool classical = true;
  nlohmann::json params;     // construction parameters, for report provenance
};

class Scheme {
 public:
  virtual ~Scheme() = default;

  const SchemeInfo& info() const { return info_; }

  virtual Bits sample_function(Rng& rng) const = 0;  // d_f from D_F
  virtual Bits sample_input(Rng& rng) const;         // x from D_X (uniform)
  virtual Bits sample_challenge(const Bits& d_f, Rng& rng) const;  // from D_X(f)
  virtual Bits truth(const Bits& d_f, const Bits& x) const = 0;    // f(x)

  virtual ProtectedState cp(const Bits& d_f, oracle::OracleHandle& o,
                            Rng& rng) const = 0;
  virtual std::pair<ProtectedState, Bits> eval(ProtectedState state,
                                               const Bits& x,
                                               oracle::OracleHandle& o,
                                               Rng& rng) const = 0;

 protected:
  SchemeInfo info_;
};

}  // namespace caromlab::schemes
