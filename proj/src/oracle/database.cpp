#include "caromlab/oracle/database.hpp"

#include <stdexcept>

namespace caromlab::oracle {

void OracleDatabase::insert(const Bits& x, const Bits& y) {
  if (x.width() != l_in_) {
    throw std::invalid_argument("OracleDatabase: input width mismatch");
  }
  if (y.width() != l_out_) {
    throw std::invalid_argument("OracleDatabase: output width mismatch");
  }
  auto it = entries_.find(x);
  if (it != entries_.end()) {
    if (it->second != y) {
      throw std::logic_error("OracleDatabase: conflicting entry for input");
    }
    return;
  }
  entries_.emplace(x, y);
}

nlohmann::json OracleDatabase::to_json() const {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [x, y] : entries_) {
    entries[x.hex()] = y.hex();
  }
  return nlohmann::json{
      {"l_in", l_in_}, {"l_out", l_out_}, {"entries", entries}};
}

OracleDatabase OracleDatabase::from_json(const nlohmann::json& j) {
  OracleDatabase db(j.at("l_in").get<int>(), j.at("l_out").get<int>());
  for (const auto& [k, v] : j.at("entries").items()) {
    db.insert(Bits::from_hex(k, db.l_in_), Bits::from_hex(v.get<std::string>(), db.l_out_));
  }
  return db;
}

AnswerTape::AnswerTape(std::vector<Bits> answers, int l_out)
    : l_out_(l_out), answers_(std::move(answers)) {
  for (const Bits& r : answers_) {
    if (r.width() != l_out_) {
      throw std::invalid_argument("AnswerTape: answer width mismatch");
    }
  }
}

AnswerTape AnswerTape::sample(int n, int l_out, Rng& rng) {
  std::vector<Bits> answers;
  answers.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) answers.push_back(rng.bits(l_out));
  return AnswerTape(std::move(answers), l_out);
}

const Bits& AnswerTape::at(int j) const {
  if (j < 1 || j > size()) {
    throw std::out_of_range("AnswerTape: index out of range");
  }
  return answers_[static_cast<std::size_t>(j - 1)];
}

nlohmann::json AnswerTape::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Bits& r : answers_) arr.push_back(r.hex());
  return nlohmann::json{{"l_out", l_out_}, {"answers", arr}};
}

AnswerTape AnswerTape::from_json(const nlohmann::json& j) {
  int l_out = j.at("l_out").get<int>();
  std::vector<Bits> answers;
  for (const auto& v : j.at("answers")) {
    answers.push_back(Bits::from_hex(v.get<std::string>(), l_out));
  }
  return AnswerTape(std::move(answers), l_out);
}

}  // namespace caromlab::oracle
