#include <algorithm>
#include <functional>

#include "isodec/decomposition.hpp"
#include "isodec/error.hpp"

namespace isodec {

std::vector<AdmissibilityReport> search_admissible(const Analysis& analysis, const SearchOptions& options) {
  const auto subgroups = enumerate_subgroups(analysis.group(), options.max_order);
  const std::size_t count = subgroups.size();
  const std::size_t r = analysis.classes().size();
  const auto& group = *analysis.group();

  std::vector<std::vector<unsigned>> dims;
  std::vector<std::int64_t> genera;
  for (const auto& h : subgroups) {
    dims.push_back(analysis.fixed_dims(h));
    genera.push_back(analysis.quotient_genus(h));
  }

  // conjugate_of[i][x] = index of x^-1 H_i x
  std::vector<std::vector<std::size_t>> conjugate_of;
  if (options.dedupe_conjugates) {
    conjugate_of.assign(count, std::vector<std::size_t>(group.order()));
    for (std::size_t i = 0; i < count; ++i) {
      for (Element x = 0; x < group.order(); ++x) {
        const auto c = subgroups[i].conjugate(x);
        auto it = std::lower_bound(subgroups.begin(), subgroups.end(), c, [](const Subgroup& a, const Subgroup& b) {
          if (a.order() != b.order()) return a.order() < b.order();
          return a.members() < b.members();
        });
        ensure(it != subgroups.end() && *it == c, "conjugate subgroup missing from the enumeration");
        conjugate_of[i][x] = std::size_t(it - subgroups.begin());
      }
    }
  }
  auto is_canonical = [&](const std::vector<std::size_t>& chosen) {
    std::vector<std::size_t> image(chosen.size());
    for (Element x = 1; x < group.order(); ++x) {
      for (std::size_t k = 0; k < chosen.size(); ++k) image[k] = conjugate_of[chosen[k]][x];
      std::sort(image.begin(), image.end());
      if (image < chosen) return false;
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  std::vector<unsigned> sums(r, 0);
  std::int64_t genus_sum = 0;

  // Admissibility only gets harder as members are added, so failing branches are cut.
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    for (std::size_t i = start; i < count; ++i) {
      bool ok = true;
      for (std::size_t l = 0; l < r && ok; ++l)
        if (analysis.factors()[l].dim_b != 0 && sums[l] + dims[i][l] > analysis.classes()[l].degree) ok = false;
      if (!ok) continue;
      chosen.push_back(i);
      for (std::size_t l = 0; l < r; ++l) sums[l] += dims[i][l];
      genus_sum += genera[i];
      const bool keep = (!options.require_full || genus_sum == analysis.genus()) &&
                        (!options.dedupe_conjugates || is_canonical(chosen));
      if (keep) found.push_back(chosen);
      if (chosen.size() < options.max_t) extend(i + 1);
      genus_sum -= genera[i];
      for (std::size_t l = 0; l < r; ++l) sums[l] -= dims[i][l];
      chosen.pop_back();
    }
  };
  if (options.max_t > 0) extend(0);

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<AdmissibilityReport> out;
  out.reserve(found.size());
  for (const auto& indices : found) {
    AdmissibilityReport report;
    report.ambient_order = group.order();
    report.ambient_orbit_genus = analysis.orbit_genus();
    report.sums.assign(r, 0);
    for (std::size_t l = 0; l < r; ++l) {
      report.degrees.push_back(analysis.classes()[l].degree);
      report.schur_indices.push_back(analysis.classes()[l].schur_index);
      report.dim_b.push_back(analysis.factors()[l].dim_b);
    }
    for (auto i : indices) {
      report.collection.push_back(subgroups[i]);
      report.fixed_dims.push_back(dims[i]);
      for (std::size_t l = 0; l < r; ++l) report.sums[l] += dims[i][l];
    }
    for (std::size_t l = 0; l < r; ++l) {
      if (report.dim_b[l] == 0)
        report.slacks.emplace_back();
      else
        report.slacks.emplace_back(std::int64_t(report.degrees[l]) - std::int64_t(report.sums[l]));
    }
    report.admissible = true;
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace isodec
