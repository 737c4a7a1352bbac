// Copyright 2026 The ratlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratlab/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace ratlab {

std::string format_energy(double value) {
  if (std::isfinite(value) && std::abs(value - std::round(value)) < 1e-9 &&
      std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(std::llround(value)));
  }
  return format_real(value);
}

std::string format_hamming(const Hamming& h) {
  return std::to_string(h.total) + " (" + std::to_string(h.items) + ", " +
         std::to_string(h.slack) + ")";
}

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string bold_if(bool flag, const std::string& text) {
  return flag ? "**" + text + "**" : text;
}

const BaselineRecord* find_baseline(const std::vector<BaselineRecord>& baselines,
                                    const std::string& name) {
  for (const auto& b : baselines) {
    if (b.instance == name) return &b;
  }
  return nullptr;
}

}  // namespace

TableArtifact emit_benchmark_table(const std::vector<BaselineRecord>& records) {
  TableArtifact out;
  std::ostringstream md;
  std::ostringstream csv;
  md << "| Instance | Best energy | Energy wrt. parent | Hamming distance |\n"
     << "|---|---|---|---|\n";
  csv << "instance,parent,best_energy,energy_wrt_parent,energy_gap,h,n_h,s_h,best_bitstring,"
         "optimum_energy,error\n";
  for (const auto& r : records) {
    const std::string best = r.error ? "error" : format_energy(r.best_energy);
    std::string wrt = "--";
    std::string ham = "--";
    if (r.closeness) {
      wrt = format_energy(r.closeness->energy_cross) + " (" +
            format_energy(r.closeness->energy_gap) + ")";
      ham = format_hamming(r.closeness->hamming);
    }
    md << "| " << r.instance << " | " << best << " | " << wrt << " | " << ham << " |\n";

    csv << r.instance << ',' << r.parent.value_or("") << ','
        << (r.error ? "" : format_real(r.best_energy)) << ',';
    if (r.closeness) {
      const auto& c = *r.closeness;
      csv << format_real(c.energy_cross) << ',' << format_real(c.energy_gap) << ','
          << c.hamming.total << ',' << c.hamming.items << ',' << c.hamming.slack;
    } else {
      csv << ",,,,";
    }
    csv << ',' << (r.error ? "" : r.best.to_string()) << ','
        << (r.optimum_energy ? format_real(*r.optimum_energy) : "") << ','
        << (r.error ? "\"" + *r.error + "\"" : "") << '\n';
    ++out.rows;
  }
  out.markdown = md.str();
  out.csv = csv.str();
  return out;
}

TableArtifact emit_transfer_table(const std::vector<TransferRecord>& records) {
  // targets in first-seen order
  std::vector<std::string> targets;
  for (const auto& r : records) {
    if (std::find(targets.begin(), targets.end(), r.target) == targets.end()) {
      targets.push_back(r.target);
    }
  }

  TableArtifact out;
  std::ostringstream md;
  std::ostringstream csv;
  csv << "target,source,best,avg,std,best_flag,avg_flag,std_flag,skipped\n";
  for (const auto& target : targets) {
    const TransferRecord* control = nullptr;
    for (const auto& r : records) {
      if (r.target == target && r.is_control() && !r.skipped) control = &r;
    }
    md << "### Performance analysis on " << target << "\n\n"
       << "| Source of Knowledge | (best, avg., st.) |\n|---|---|\n";
    auto emit = [&](const TransferRecord& r) {
      ++out.rows;
      csv << r.target << ',' << r.source << ',';
      if (r.skipped) {
        md << "| " << r.source << " | skipped |\n";
        csv << ",,,,,,\"" << *r.skipped << "\"\n";
        return;
      }
      const bool cmp = control && !r.is_control();
      const bool fb = cmp && r.stats.best <= control->stats.best;
      const bool fa = cmp && r.stats.avg <= control->stats.avg;
      const bool fs = cmp && r.stats.std <= control->stats.std;
      md << "| " << r.source << " | (" << bold_if(fb, format_energy(r.stats.best)) << ", "
         << bold_if(fa, fixed(r.stats.avg, 1)) << ", " << bold_if(fs, fixed(r.stats.std, 2))
         << ") |\n";
      csv << format_real(r.stats.best) << ',' << format_real(r.stats.avg) << ','
          << format_real(r.stats.std) << ',' << fb << ',' << fa << ',' << fs << ",\n";
    };
    for (const auto& r : records) {
      if (r.target == target && r.is_control()) emit(r);
    }
    for (const auto& r : records) {
      if (r.target == target && !r.is_control()) emit(r);
    }
    md << "\n";
  }
  if (targets.empty()) {
    md << "| Source of Knowledge | (best, avg., st.) |\n|---|---|\n";
  }
  out.markdown = md.str();
  out.csv = csv.str();
  return out;
}

std::string to_string(SortKey key) {
  return key == SortKey::energy_gap ? "energy_gap" : "hamming";
}

SortKey parse_sort_key(const std::string& text) {
  if (text == "energy_gap") return SortKey::energy_gap;
  if (text == "hamming") return SortKey::hamming;
  fail(ErrorKind::invalid_argument, "unknown sort key '" + text + "'");
}

BoxplotData boxplot_data(const std::vector<TransferRecord>& transfers,
                         const std::vector<BaselineRecord>& baselines, SortKey key) {
  BoxplotData out;
  std::ostringstream csv;
  csv << "order,group,target,sort_key,key_value,run,run_best\n";
  int order = 0;
  auto emit = [&](const TransferRecord& r, const std::string& value) {
    for (std::size_t k = 0; k < r.run_bests.size(); ++k) {
      csv << order << ',' << r.source << ',' << r.target << ',' << to_string(key) << ','
          << value << ',' << k << ',' << format_real(r.run_bests[k]) << '\n';
    }
    out.groups.push_back(r.source);
    ++order;
  };

  for (const auto& r : transfers) {
    if (r.is_control() && !r.skipped) emit(r, "");
  }

  struct Keyed {
    double value;
    const TransferRecord* record;
  };
  std::vector<Keyed> keyed;
  for (const auto& r : transfers) {
    if (r.is_control() || r.skipped) continue;
    const BaselineRecord* b = find_baseline(baselines, r.source);
    if (!b || !b->closeness) {
      out.warnings.push_back("no closeness for source '" + r.source + "'; group omitted");
      continue;
    }
    const double v = key == SortKey::energy_gap ? b->closeness->energy_gap
                                                : b->closeness->hamming.total;
    keyed.push_back({v, &r});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.record->source < b.record->source;
  });
  for (const auto& k : keyed) emit(*k.record, format_real(k.value));
  out.csv = csv.str();
  return out;
}

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::energy_gap: return "energy_gap";
    case Metric::hamming_total: return "hamming_total";
    case Metric::hamming_items: return "hamming_items";
  }
  return "?";
}

std::vector<CorrelationReport> correlation(const std::vector<TransferRecord>& transfers,
                                           const std::vector<BaselineRecord>& baselines) {
  std::vector<double> gap, total, items, perf;
  for (const auto& r : transfers) {
    if (r.is_control() || r.skipped) continue;
    const BaselineRecord* b = find_baseline(baselines, r.source);
    if (!b || !b->closeness) continue;
    gap.push_back(b->closeness->energy_gap);
    total.push_back(b->closeness->hamming.total);
    items.push_back(b->closeness->hamming.items);
    perf.push_back(r.stats.avg);
  }
  require(perf.size() >= 3, ErrorKind::data,
          "correlation needs at least 3 (source, target) pairs, got " +
              std::to_string(perf.size()));
  const Eigen::Map<const Eigen::VectorXd> y(perf.data(), static_cast<Eigen::Index>(perf.size()));
  auto report = [&](Metric m, const std::vector<double>& x) {
    const Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    return CorrelationReport{m, spearman(xv, y), static_cast<int>(perf.size())};
  };
  return {report(Metric::energy_gap, gap), report(Metric::hamming_total, total),
          report(Metric::hamming_items, items)};
}

}  // namespace ratlab
