#include "subduce/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

namespace subduce {

namespace {

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", rounded(x));
  return buf;
}

nlohmann::ordered_json surd_json(const Surd& s) {
  return {{"a", s.a}, {"b", s.b}, {"c", s.c}};
}

nlohmann::ordered_json index_json(const TableauIndex& index) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < index.size(); ++k) {
    out.push_back({{"rank", k + 1}, {"tableau", index[k].to_string()}});
  }
  return out;
}

// Tables repeat values heavily, so each distinct value is searched once.
class SurdCache {
 public:
  explicit SurdCache(const ReportOptions& options) : options_(options) {}
  std::optional<Surd> operator()(double v) {
    auto [it, fresh] = cache_.try_emplace(v);
    if (fresh) it->second = identify_surd(v, options_.surd_b_max, options_.surd_c_max);
    return it->second;
  }

 private:
  const ReportOptions& options_;
  std::map<double, std::optional<Surd>> cache_;
};

template <typename Fn>
void for_each_coefficient(const SdcTable& table, Fn&& fn) {
  for (std::size_t eta = 0; eta < table.multiplicity(); ++eta)
    for (std::size_t m = 0; m < table.dim; ++m)
      for (std::size_t m1 = 0; m1 < table.dim1; ++m1)
        for (std::size_t m2 = 0; m2 < table.dim2; ++m2) {
          const double v = rounded(table.value(eta, m, m1, m2));
          if (v != 0.0) fn(eta, m, m1, m2, v);
        }
}

}  // namespace

double rounded(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double v = std::strtod(buf, nullptr);
  return v == 0.0 ? 0.0 : v;
}

nlohmann::ordered_json to_json(const Grid& grid, const SdcTable& table, const ReportOptions& options) {
  nlohmann::ordered_json out;
  out["lambda"] = table.lambda.parts();
  out["lambda1"] = table.lambda1.parts();
  out["lambda2"] = table.lambda2.parts();
  out["n1"] = table.n1;
  out["multiplicity"] = table.multiplicity();
  if (table.residual >= 0) {
    out["residual"] = rounded(table.residual);
  } else {
    out["residual"] = nullptr;
  }
  out["tolerance"] = {{"rank_cutoff", table.tolerance.rank_cutoff},
                      {"residual_tol", table.tolerance.residual_tol},
                      {"orthonormality_tol", table.tolerance.orthonormality_tol}};
  SurdCache surd(options);
  auto basis = nlohmann::ordered_json::array();
  for (std::size_t eta = 0; eta < table.multiplicity(); ++eta) {
    basis.push_back({{"eta", eta + 1}, {"coefficients", nlohmann::ordered_json::array()}});
  }
  for_each_coefficient(table, [&](std::size_t eta, std::size_t m, std::size_t m1, std::size_t m2, double v) {
    nlohmann::ordered_json c{{"m", m + 1}, {"m1", m1 + 1}, {"m2", m2 + 1}, {"value", v}};
    if (options.surds) {
      if (auto s = surd(v)) c["surd"] = surd_json(*s);
    }
    basis[eta]["coefficients"].push_back(std::move(c));
  });
  out["basis"] = std::move(basis);
  if (options.tableau_index) {
    out["tableau_index"] = {{"lambda", index_json(grid.standard())},
                            {"lambda1", index_json(grid.first())},
                            {"lambda2", index_json(grid.second())}};
  }
  return out;
}

std::string to_csv(const SdcTable& table, const ReportOptions& options) {
  std::ostringstream out;
  out << "# lambda=" << table.lambda.to_string() << " lambda1=" << table.lambda1.to_string()
      << " lambda2=" << table.lambda2.to_string() << " n1=" << table.n1 << '\n';
  out << "# multiplicity=" << table.multiplicity()
      << " residual=" << (table.residual >= 0 ? format12(table.residual) : std::string("unset")) << '\n';
  out << "eta,m,m1,m2,value,surd\n";
  SurdCache surd(options);
  for_each_coefficient(table, [&](std::size_t eta, std::size_t m, std::size_t m1, std::size_t m2, double v) {
    out << eta + 1 << ',' << m + 1 << ',' << m1 + 1 << ',' << m2 + 1 << ',' << format12(v) << ',';
    if (options.surds) {
      if (auto s = surd(v)) out << s->to_string();
    }
    out << '\n';
  });
  return out.str();
}

}  // namespace subduce
