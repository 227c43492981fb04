#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "nutforge/enumeration.hpp"
#include "nutforge/exactla.hpp"
#include "nutforge/io.hpp"
#include "nutforge/search.hpp"
#include "nutforge/voltage.hpp"

namespace nutforge {

using Json = nlohmann::ordered_json;

/// Exact rationals travel as strings, "p" or "p/q".
inline Json to_json(const Rational& q) { return q.get_str(); }

inline Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

inline Json to_json(const KernelBasis& k) {
  Json out = Json::array();
  for (const auto& v : k.vectors) out.push_back(to_json(v));
  return out;
}

inline Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json nut_certificate(const Graph& g, const NutVerdict& v) {
  return Json{{"order", g.order()},
              {"size", g.edge_count()},
              {"graph6", to_graph6(g)},
              {"is_nut", v.is_nut},
              {"nullity", v.kernel.dimension()},
              {"kernel", to_json(v.kernel)}};
}

inline Json enumeration_json(const EnumerationReport& r) {
  Json list = Json::array();
  for (const auto& p : r.pregraphs) list.push_back(format_pregraph(p));
  return Json{{"order", r.order},
              {"underlying_count", r.underlying_count},
              {"quotient_count", r.quotient_count},
              {"pregraphs", std::move(list)}};
}

inline Json verdict_json(const PregraphVerdict& v) {
  Json step1{{"status", v.step1.excluded() ? "excluded" : "passed"},
             {"kernel_dimension", v.step1.kernel.dimension()},
             {"basis", to_json(v.step1.kernel)}};
  if (v.step1.witness) step1["witness"] = to_json(*v.step1.witness);
  Json step2;
  switch (v.step2.status) {
    case Step2Verdict::Status::kSkipped:
      step2 = Json{{"status", "skipped"}};
      break;
    case Step2Verdict::Status::kExcluded:
      step2 = Json{{"status", "excluded"}, {"matrices_examined", v.step2.matrices_examined}};
      break;
    case Step2Verdict::Status::kCandidate:
      step2 = Json{{"status", "candidate"},
                   {"matrices_examined", v.step2.matrices_examined},
                   {"witness_B", to_json(*v.step2.witness_matrix)},
                   {"witness_vector", to_json(*v.step2.witness_vector)}};
      break;
  }
  return Json{{"pregraph", format_pregraph(v.pregraph)},
              {"step1", std::move(step1)},
              {"step2", std::move(step2)}};
}

inline Json search_json(const SearchReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  return Json{{"order", r.order},
              {"quotient_count", r.verdicts.size()},
              {"excluded_step1", r.excluded_step1},
              {"excluded_step2", r.excluded_step2},
              {"candidates", r.candidates},
              {"verdicts", std::move(verdicts)}};
}

}  // namespace nutforge
