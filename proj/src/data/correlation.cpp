// Copyright 2026 The qcsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/data/correlation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qcs/common.hpp"

namespace qcs {

std::vector<CorrelationRow> correlation_report(
    const std::map<std::string, std::vector<ScoreCard>>& scorecards_by_variant,
    const std::map<int, MetricReport>& metrics_by_circuit, MetricField metric) {
  std::vector<CorrelationRow> out;
  for (const auto& [variant, cards] : scorecards_by_variant) {
    CorrelationRow row;
    row.variant = variant;
    row.metric = metric;
    for (const auto& card : cards) {
      const auto it = metrics_by_circuit.find(card.circuit_id);
      if (it == metrics_by_circuit.end()) continue;
      const auto value = metric_value(it->second, metric);
      if (!value) continue;
      row.points.push_back({card.circuit_id, card.final_score, *value});
    }
    std::sort(row.points.begin(), row.points.end(),
              [](const auto& a, const auto& b) { return a.circuit_id < b.circuit_id; });
    if (row.points.size() < 3) {
      throw Error("correlation: variant " + variant + " shares only " +
                  std::to_string(row.points.size()) + " circuits with the metric table (need 3)");
    }
    std::vector<double> xs, ys;
    for (const auto& p : row.points) {
      xs.push_back(p.score);
      ys.push_back(p.metric);
    }
    row.n_circuits = static_cast<int>(row.points.size());
    row.rho = spearman(xs, ys);
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

std::string scatter_csv(const CorrelationRow& row) {
  std::ostringstream os;
  os << "circuit_id,score," << to_string(row.metric) << "\n";
  for (const auto& p : row.points) {
    os << p.circuit_id << "," << fmt("%.17g", p.score) << "," << fmt("%.17g", p.metric) << "\n";
  }
  return os.str();
}

std::string scatter_svg(const CorrelationRow& row) {
  constexpr double kW = 480, kH = 360, kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!row.points.empty()) {
    const auto [xa, xb] = std::minmax_element(row.points.begin(), row.points.end(),
                                              [](auto& a, auto& b) { return a.score < b.score; });
    const auto [ya, yb] = std::minmax_element(row.points.begin(), row.points.end(),
                                              [](auto& a, auto& b) { return a.metric < b.metric; });
    x0 = xa->score;
    x1 = xb->score;
    y0 = ya->metric;
    y1 = yb->metric;
  }
  if (x1 - x0 < 1e-12) { x0 -= 0.5; x1 += 0.5; }
  if (y1 - y0 < 1e-12) { y0 -= 0.5; y1 += 0.5; }
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
     << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"14\">"
     << row.variant << " vs " << to_string(row.metric) << " (rho = " << fmt("%.3f", row.rho)
     << ", n = " << row.n_circuits << ")</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = x0 + (x1 - x0) * t / 4.0, yv = y0 + (y1 - y0) * t / 4.0;
    os << "<text x=\"" << fmt("%.1f", sx(xv)) << "\" y=\"" << kH - kBottom + 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
       << fmt("%.3g", xv) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt("%.1f", sy(yv) + 3)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt("%.3g", yv)
       << "</text>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kH - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">final score</text>\n";
  os << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" transform=\"rotate(-90 16 " << kTop + ph / 2
     << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << to_string(row.metric) << "</text>\n";
  for (const auto& p : row.points) {
    os << "<circle cx=\"" << fmt("%.2f", sx(p.score)) << "\" cy=\"" << fmt("%.2f", sy(p.metric))
       << "\" r=\"3\" fill=\"steelblue\"><title>circuit " << p.circuit_id << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qcs
