#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qclone/cloner.hpp"
#include "qclone/discord.hpp"
#include "qclone/errors.hpp"
#include "qclone/hermat.hpp"
#include "qclone/separability.hpp"

namespace py = pybind11;
using namespace qclone;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

DensityMatrix4 to_matrix4(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != 4 || a.shape(1) != 4) {
    throw ContractError("expected a 4x4 array");
  }
  auto v = a.unchecked<2>();
  Matrix4 m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = v(r, c);
  return DensityMatrix4(m);
}

Array from_matrix4(const DensityMatrix4& m) {
  Array out({4, 4});
  auto v = out.mutable_unchecked<2>();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) v(r, c) = m(r, c);
  return out;
}

py::array_t<complex> from_matrix2(const DensityMatrix2& m) {
  py::array_t<complex> out({2, 2});
  auto v = out.mutable_unchecked<2>();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) v(r, c) = m(r, c);
  return out;
}

Subsystem parse_side(const std::string& s) {
  if (s == "a") return Subsystem::A;
  if (s == "b") return Subsystem::B;
  throw ContractError("subsystem must be 'a' or 'b'");
}

py::object interval_or_none(const std::optional<JInterval>& iv) {
  if (!iv) return py::none();
  return py::make_tuple(iv->lo, iv->hi);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discord and separability of Buzek-Hillery cloner output states";

  // Later registrations are tried first, so bases go in first.
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  auto& domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidStateError>(m, "InvalidStateError", domain_error.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<DiscordResult>(m, "DiscordResult")
      .def_readonly("discord", &DiscordResult::discord)
      .def_readonly("optimal_t", &DiscordResult::optimal_t)
      .def_readonly("optimal_phi", &DiscordResult::optimal_phi)
      .def_readonly("entropy_joint", &DiscordResult::entropy_joint)
      .def_readonly("entropy_a", &DiscordResult::entropy_a)
      .def_readonly("entropy_b", &DiscordResult::entropy_b)
      .def_readonly("conditional_entropy", &DiscordResult::conditional_entropy)
      .def_readonly("mutual_info_J", &DiscordResult::mutual_info_J)
      .def_readonly("mutual_info_I", &DiscordResult::mutual_info_I)
      .def("__repr__", [](const DiscordResult& r) {
        return "DiscordResult(discord=" + std::to_string(r.discord) + ", optimal_t=" + std::to_string(r.optimal_t) + ")";
      });

  py::class_<SeparabilityVerdict>(m, "SeparabilityVerdict")
      .def_readonly("w3", &SeparabilityVerdict::w3)
      .def_readonly("w4", &SeparabilityVerdict::w4)
      .def_readonly("min_ppt_eigenvalue", &SeparabilityVerdict::min_ppt_eigenvalue)
      .def_readonly("agreement", &SeparabilityVerdict::agreement)
      .def_property_readonly("classification",
                             [](const SeparabilityVerdict& v) { return std::string(to_string(v.classification)); })
      .def_property_readonly("separable",
                             [](const SeparabilityVerdict& v) { return v.classification == Classification::Separable; });

  m.def(
      "output_state",
      [](double alpha, double j) { return from_matrix4(build_output_state(InputState::from_alpha(alpha), MachineParams(j))); },
      py::arg("alpha"), py::arg("j"), "Two-clone output density matrix in the |00>,|01>,|10>,|11> basis.");
  m.def(
      "reduced_clone",
      [](const Array& rho, const std::string& which) { return from_matrix2(reduced_clone(to_matrix4(rho), parse_side(which))); },
      py::arg("rho"), py::arg("which") = "b");
  m.def(
      "clone_fidelity",
      [](double alpha, double j) { return clone_fidelity(InputState::from_alpha(alpha), MachineParams(j)); },
      py::arg("alpha"), py::arg("j"));
  m.def(
      "valid_j_range",
      [](double alpha, double tol) { return interval_or_none(valid_j_range(InputState::from_alpha(alpha), tol)); },
      py::arg("alpha"), py::arg("tol") = 1e-6);

  m.def("eigenvalues", [](const Array& rho) { return eig_sym4(to_matrix4(rho)).values; }, py::arg("rho"));
  m.def("vn_entropy", [](std::vector<double> values) { return vn_entropy(Spectrum{std::move(values)}); },
        py::arg("eigenvalues"));
  m.def("partial_transpose_b", [](const Array& rho) { return from_matrix4(partial_transpose_b(to_matrix4(rho))); },
        py::arg("rho"));

  m.def(
      "discord_at",
      [](const Array& rho, double t, double phi) { return discord_at(to_matrix4(rho), {t, phi}); },
      py::arg("rho"), py::arg("t"), py::arg("phi") = 0.0);
  m.def(
      "discord_min",
      [](const Array& rho, int grid_points, double refine_tol, bool scan_phase, const std::string& measured) {
        DiscordOptions o;
        o.grid_points = grid_points;
        o.refine_tol = refine_tol;
        o.scan_phase = scan_phase;
        o.measured = parse_side(measured);
        return discord_min(to_matrix4(rho), o);
      },
      py::arg("rho"), py::arg("grid_points") = 721, py::arg("refine_tol") = 1e-9, py::arg("scan_phase") = false,
      py::arg("measured") = "b");
  m.def(
      "discord_surface",
      [](double alpha, const std::vector<double>& j_grid, const std::vector<double>& t_grid) {
        py::list rows;
        for (const auto& p : discord_surface(InputState::from_alpha(alpha), j_grid, t_grid)) {
          rows.append(py::make_tuple(p.j, p.t, p.discord, p.physical));
        }
        return rows;
      },
      py::arg("alpha"), py::arg("j_grid"), py::arg("t_grid"),
      "Rows (j, t, discord, physical) in j-major order.");

  m.def(
      "w3_closed", [](double alpha, double j) { return w3_closed(InputState::from_alpha(alpha), MachineParams(j)); },
      py::arg("alpha"), py::arg("j"));
  m.def(
      "w4_closed", [](double alpha, double j) { return w4_closed(InputState::from_alpha(alpha), MachineParams(j)); },
      py::arg("alpha"), py::arg("j"));
  m.def(
      "w_direct",
      [](const Array& rho) {
        const WMinors w = w_direct(to_matrix4(rho));
        return py::make_tuple(w.w3, w.w4);
      },
      py::arg("rho"));
  m.def(
      "classify", [](double alpha, double j) { return classify(InputState::from_alpha(alpha), MachineParams(j)); },
      py::arg("alpha"), py::arg("j"));
  m.def(
      "separable_intervals",
      [](double alpha, double scan_step, double tol) {
        std::vector<std::pair<double, double>> out;
        for (const auto& iv : separable_intervals(InputState::from_alpha(alpha), scan_step, tol)) {
          out.emplace_back(iv.lo, iv.hi);
        }
        return out;
      },
      py::arg("alpha"), py::arg("scan_step") = 1e-4, py::arg("tol") = 1e-6);
}
