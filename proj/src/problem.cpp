#include "skewht/problem.hpp"

#include <fstream>
#include <stdexcept>

#include "skewht/json_io.hpp"

namespace skewht {

using nlohmann::json;

ProblemFile problem_from_json(const json& j) {
  ProblemFile p;
  int n = j.at("n").get<int>();
  std::vector<int> degrees(static_cast<size_t>(n), 1);
  if (j.contains("degrees")) degrees = j.at("degrees").get<std::vector<int>>();
  p.ctx = SkewContext(n, degrees);

  for (const auto& g : j.at("generators"))
    p.generators.push_back(parse_monomial(g.get<std::string>(), p.ctx));

  if (j.contains("order")) {
    std::string order = j.at("order").get<std::string>();
    if (order == "given")
      p.order = ProblemFile::Order::Given;
    else if (order == "revlex")
      p.order = ProblemFile::Order::Revlex;
    else if (order == "search")
      p.order = ProblemFile::Order::Search;
    else
      throw std::invalid_argument("order must be given|revlex|search");
  }

  if (j.contains("q") && j.at("q") != "symbolic") {
    const json& q = j.at("q");
    std::string field = q.at("field").get<std::string>();
    if (field == "fp") {
      std::uint64_t prime = q.value("p", fp::kDefaultPrime);
      QSpecialization spec(QSpecialization::Field::Prime, prime);
      for (const auto& e : q.at("entries"))
        spec.set_fp(e.at(0).get<int>(), e.at(1).get<int>(),
                    e.at(2).get<std::uint64_t>());
      p.qspec = std::move(spec);
    } else if (field == "rational") {
      QSpecialization spec(QSpecialization::Field::Rationals, 0);
      for (const auto& e : q.at("entries")) {
        Rational v = e.at(2).is_string()
                         ? rational_from_string(e.at(2).get<std::string>())
                         : Rational(e.at(2).get<long long>());
        spec.set_rat(e.at(0).get<int>(), e.at(1).get<int>(), v);
      }
      p.qspec = std::move(spec);
    } else {
      throw std::invalid_argument("q.field must be fp|rational");
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  json j;
  in >> j;
  return problem_from_json(j);
}

std::vector<Monomial> apply_order(const ProblemFile& p) {
  std::vector<Monomial> gens = minimize(p.generators);
  switch (p.order) {
    case ProblemFile::Order::Given:
      return gens;
    case ProblemFile::Order::Revlex:
      return revlex_order(p.ctx, gens);
    case ProblemFile::Order::Search: {
      auto found = search_linear_quotient_order(MonomialIdeal(p.ctx, gens));
      if (!found)
        throw std::runtime_error("order search: no linear-quotient order exists");
      return *found;
    }
  }
  return gens;
}

}  // namespace skewht
