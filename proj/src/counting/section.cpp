#include "ura/counting/section.hpp"

#include "ura/core/error.hpp"

namespace ura {

std::optional<std::size_t> OneDimSystem::index(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return i;
  for (std::size_t i = 0; i < derived.size(); ++i)
    if (derived[i].name == name) return variables.size() + i;
  return std::nullopt;
}

OneDimSystem section(const LinrecSystem& sys, Axis axis, std::size_t level) {
  const std::size_t extent = level + 1;
  return section(sys, axis, level, evaluate(sys, extent, extent));
}

OneDimSystem section(const LinrecSystem& sys, Axis axis, std::size_t level, const SequenceTable& table) {
  sys.validate();
  const std::size_t m = sys.size();
  if ((axis == Axis::First ? table.max_n() : table.max_k()) < level)
    throw Error("table too small for section");
  const std::size_t count = m * (level + 2);
  auto var = [&](std::size_t lvl, std::size_t j) { return lvl * m + j; };
  const std::size_t g0 = m * (level + 1);

  OneDimSystem out;
  out.variables.resize(count);
  out.initial.resize(count);
  out.equations.assign(count, std::vector<PolyK>(count));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t lvl = 0; lvl <= level; ++lvl) {
      out.variables[var(lvl, j)] = sys.variables[j] + "@" + std::to_string(lvl);
      out.initial[var(lvl, j)] = axis == Axis::First ? table.at(j, lvl, 0) : table.at(j, 0, lvl);
    }
    out.variables[g0 + j] = sys.variables[j] + "@g";
    out.initial[g0 + j] = axis == Axis::First ? sys.boundaries[j].first_row : sys.boundaries[j].first_column;
    out.equations[g0 + j][g0 + j] = PolyK(1);
    out.equations[var(0, j)][g0 + j] = PolyK(1);
  }

  for (std::size_t lvl = 0; lvl < level; ++lvl) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<PolyK>& row = out.equations[var(lvl + 1, j)];
      for (std::size_t i = 0; i < m; ++i) {
        const AffineOperator& op = sys.equations[j][i];
        if (op.is_zero()) continue;
        if (axis == Axis::Second) {
          // k = lvl fixed: f_j(n+1,lvl+1) = p00 f_i(n,lvl) + p01 f_i(n+1,lvl) + p10 f_i(n,lvl+1).
          const Rat at(static_cast<long>(lvl));
          const PolyK c00(op.p00.eval(at)), c01(op.p01.eval(at)), c10(op.p10.eval(at));
          row[var(lvl, i)] += c00;
          row[var(lvl + 1, i)] += c10;
          if (!c01.is_zero())
            for (std::size_t v = 0; v < count; ++v)
              if (!out.equations[var(lvl, i)][v].is_zero()) row[v] += c01 * out.equations[var(lvl, i)][v];
        } else {
          // n = lvl fixed: f_j(lvl+1,k+1) = p00 f_i(lvl,k) + p01 f_i(lvl+1,k) + p10 f_i(lvl,k+1).
          row[var(lvl, i)] += op.p00;
          row[var(lvl + 1, i)] += op.p01;
          if (!op.p10.is_zero())
            for (std::size_t v = 0; v < count; ++v)
              if (!out.equations[var(lvl, i)][v].is_zero()) row[v] += op.p10 * out.equations[var(lvl, i)][v];
        }
      }
    }
  }
  for (const DerivedVariable& dv : sys.derived) {
    DerivedVariable copy{dv.name, {}};
    for (const auto& [j, c] : dv.terms) copy.terms.emplace_back(var(level, j), c);
    out.derived.push_back(std::move(copy));
  }
  return out;
}

std::vector<std::vector<Rat>> evaluate(const OneDimSystem& sys, std::size_t length) {
  const std::size_t m = sys.order();
  std::vector<std::vector<Rat>> values(m + sys.derived.size(), std::vector<Rat>(length + 1));
  for (std::size_t i = 0; i < m; ++i) values[i][0] = sys.initial[i];
  for (std::size_t t = 0; t < length; ++t) {
    const Rat at(static_cast<long>(t));
    for (std::size_t i = 0; i < m; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < m; ++j) {
        const PolyK& p = sys.equations[i][j];
        if (p.is_zero() || values[j][t] == 0) continue;
        acc += p.eval(at) * values[j][t];
      }
      values[i][t + 1] = acc;
    }
  }
  for (std::size_t d = 0; d < sys.derived.size(); ++d)
    for (std::size_t t = 0; t <= length; ++t) {
      Rat v(0);
      for (const auto& [j, c] : sys.derived[d].terms) v += c * values[j][t];
      values[m + d][t] = v;
    }
  return values;
}

}  // namespace ura
