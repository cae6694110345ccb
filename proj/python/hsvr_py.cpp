#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsvr/pipeline.hpp"
#include "hsvr/serialize.hpp"
#include "hsvr/signals.hpp"

namespace py = pybind11;
using namespace hsvr;

PYBIND11_MODULE(_hsvr, m) {
  m.doc() = "Multiscale SVR cascades with spectrum-derived kernel scales";

  py::class_<Signal>(m, "Signal")
      .def_readonly("x", &Signal::x)
      .def_readonly("y", &Signal::y)
      .def_readonly("dx", &Signal::dx)
      .def("__len__", [](const Signal& s) { return s.size(); });

  m.def("make_signal", &make_signal, py::arg("x"), py::arg("y"));
  m.def("generate_named", &signals::generate_named, py::arg("slug"), py::arg("a"), py::arg("b"),
        py::arg("n"));
  m.def("function_slugs", [] {
    std::vector<std::string> slugs;
    for (const auto& f : signals::function_registry()) slugs.push_back(f.slug);
    return slugs;
  });
  m.def("split_alternating", &signals::split_alternating, py::arg("signal"));
  m.def(
      "lorenz_trajectory",
      [](double t_end, std::size_t n_points) {
        const auto traj = signals::lorenz_trajectory(t_end, n_points);
        return py::make_tuple(traj.x, traj.y, traj.z);
      },
      py::arg("t_end"), py::arg("n_points"));
  m.def("load_csv", &signals::load_csv, py::arg("path"));
  m.def("save_csv", &signals::save_csv, py::arg("signal"), py::arg("path"));

  py::class_<ScaleEstimate>(m, "ScaleEstimate")
      .def_readonly("scales", &ScaleEstimate::scales)
      .def_readonly("support_frequencies", &ScaleEstimate::support_frequencies)
      .def_readonly("decay", &ScaleEstimate::decay)
      .def_property_readonly("method",
                             [](const ScaleEstimate& e) { return to_string(e.method); });

  m.def(
      "fft_scales",
      [](const Signal& signal, double decay, double threshold) {
        return fft_scales(signal, decay, threshold);
      },
      py::arg("signal"), py::arg("decay") = 2.0, py::arg("threshold") = 0.01);
  m.def(
      "dmd_scales",
      [](const Signal& signal, double decay, double tol, double eta, std::size_t rows) {
        DmdOptions opt;
        opt.decay = decay;
        opt.tol = tol;
        opt.eta = eta;
        opt.m_rows = rows;
        return dmd_scales(signal, opt);
      },
      py::arg("signal"), py::arg("decay") = 2.0, py::arg("tol") = 1e-2, py::arg("eta") = 0.02,
      py::arg("rows") = 0);

  m.def("epsilon_rule", &epsilon_rule, py::arg("y"));
  m.def("c_rule", &c_rule, py::arg("residual"));

  py::class_<SvrModel>(m, "SvrModel")
      .def_readonly("support_x", &SvrModel::support_x)
      .def_readonly("beta", &SvrModel::beta)
      .def_readonly("bias", &SvrModel::bias)
      .def_readonly("gamma", &SvrModel::gamma)
      .def_readonly("converged", &SvrModel::converged);

  py::class_<HsvrModel>(m, "HsvrModel")
      .def_readonly("layers", &HsvrModel::layers)
      .def_readonly("scales", &HsvrModel::scales)
      .def_readonly("epsilon", &HsvrModel::epsilon)
      .def("to_json", [](const HsvrModel& model) { return to_json(model); })
      .def_static("from_json", &hsvr_model_from_json, py::arg("text"));

  py::class_<LayerReport>(m, "LayerReport")
      .def_readonly("layer_index", &LayerReport::layer_index)
      .def_readonly("sigma", &LayerReport::sigma)
      .def_readonly("c_used", &LayerReport::c_used)
      .def_readonly("n_support", &LayerReport::n_support)
      .def_readonly("residual_max", &LayerReport::residual_max)
      .def_readonly("test_error", &LayerReport::test_error);

  m.def(
      "train",
      [](const std::vector<double>& x, const std::vector<double>& y,
         const std::vector<double>& scales, double epsilon) {
        const TrainResult res = train(x, y, scales, epsilon);
        return py::make_tuple(res.model, res.reports);
      },
      py::arg("x"), py::arg("y"), py::arg("scales"), py::arg("epsilon"));
  m.def("predict",
        py::overload_cast<const HsvrModel&, const std::vector<double>&>(&predict),
        py::arg("model"), py::arg("x"));
  m.def("layerwise_errors", &layerwise_errors, py::arg("model"), py::arg("x_test"),
        py::arg("y_test"));
  m.def("phase_sweep", &phase_sweep, py::arg("x"), py::arg("y"), py::arg("x_test"),
        py::arg("y_test"), py::arg("sigma0"), py::arg("decay"), py::arg("n_layers"));

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("id", &RunReport::id)
      .def_readonly("epsilon", &RunReport::epsilon)
      .def_readonly("predicted_layers", &RunReport::predicted_layers)
      .def_readonly("final_error", &RunReport::final_error)
      .def_readonly("error_over_epsilon", &RunReport::error_over_epsilon)
      .def_readonly("layers", &RunReport::layers)
      .def_property_readonly("method", [](const RunReport& r) { return to_string(r.method); })
      .def("to_json", [](const RunReport& r) { return to_json(r); });

  m.def(
      "run_pipeline",
      [](const Signal& full, const std::string& id, const std::string& method, double decay) {
        PipelineOptions opt;
        opt.method = method == "dmd" ? ScaleMethod::DMD : ScaleMethod::FFT;
        opt.decay = decay;
        opt.dmd.decay = decay;
        const PipelineResult res = run_pipeline(full, id, opt);
        return py::make_tuple(res.model, res.scales, res.report);
      },
      py::arg("signal"), py::arg("id") = "series", py::arg("method") = "fft",
      py::arg("decay") = 2.0);

  py::register_exception<NoOscillatoryContent>(m, "NoOscillatoryContentError");
}
