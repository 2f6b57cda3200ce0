#include <fmt/format.h>

#include "ffmea/errors.hpp"
#include "ffmea/io.hpp"
#include "text_util.hpp"

namespace ffmea {

Axis parse_axis(std::string_view name) {
  const auto n = detail::lower(detail::trim(name));
  if (n == "s" || n == "severity") return Axis::kSeverity;
  if (n == "o" || n == "occurrence") return Axis::kOccurrence;
  if (n == "d" || n == "detection") return Axis::kDetection;
  throw ValidationError("unknown axis '" + std::string(name) + "' (expected S, O or D)");
}

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::kSeverity: return "S";
    case Axis::kOccurrence: return "O";
    case Axis::kDetection: return "D";
  }
  return "?";
}

SurfaceGrid export_surface(const Fis& fis, Axis x_axis, Axis y_axis, double fixed_value, std::size_t resolution,
                           std::size_t samples) {
  if (x_axis == y_axis) {
    throw ValidationError("surface axes must differ");
  }
  if (resolution < 2) {
    throw ValidationError("surface resolution must be at least 2");
  }
  const Axis fixed_axis = static_cast<Axis>(3 - static_cast<int>(x_axis) - static_cast<int>(y_axis));
  const auto& inputs = fis.rule_base.inputs();
  const auto& fixed_universe = inputs[static_cast<int>(fixed_axis)].universe();
  if (!fixed_universe.contains(fixed_value)) {
    throw ValidationError(fmt::format("fixed {} value {} outside [{}, {}]", axis_name(fixed_axis), fixed_value,
                                      fixed_universe.lo, fixed_universe.hi));
  }

  auto grid_points = [&](Axis axis) {
    const auto& u = inputs[static_cast<int>(axis)].universe();
    std::vector<double> pts(resolution);
    for (std::size_t i = 0; i < resolution; ++i) {
      pts[i] = u.lo + (u.hi - u.lo) * static_cast<double>(i) / static_cast<double>(resolution - 1);
    }
    pts.back() = u.hi;
    return pts;
  };

  SurfaceGrid grid{x_axis, y_axis, fixed_axis, fixed_value, grid_points(x_axis), grid_points(y_axis), {}};
  grid.f_rpn.reserve(resolution * resolution);
  const OutputSampling sampling(fis.rule_base.output(), samples);
  double sod[3];
  sod[static_cast<int>(fixed_axis)] = fixed_value;
  for (double x : grid.xs) {
    for (double y : grid.ys) {
      sod[static_cast<int>(x_axis)] = x;
      sod[static_cast<int>(y_axis)] = y;
      grid.f_rpn.push_back(fuzzy_rpn(fis, sod[0], sod[1], sod[2], sampling));
    }
  }
  return grid;
}

std::string render_surface(const SurfaceGrid& grid) {
  std::string out;
  out += fmt::format("# fuzzy RPN surface: x={} y={} {}={}\n", axis_name(grid.x_axis), axis_name(grid.y_axis),
                     axis_name(grid.fixed_axis), grid.fixed_value);
  out += fmt::format("# resolution {}x{}\n", grid.xs.size(), grid.ys.size());
  out += "x,y,f_rpn\n";
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    for (std::size_t j = 0; j < grid.ys.size(); ++j) {
      out += fmt::format("{},{},{}\n", grid.xs[i], grid.ys[j], grid.value(i, j));
    }
  }
  return out;
}

}  // namespace ffmea
