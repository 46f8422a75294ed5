#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcat/analyzer.hpp"
#include "pcat/closure.hpp"
#include "pcat/ops.hpp"
#include "pcat/qspace.hpp"
#include "pcat/verify.hpp"

namespace py = pybind11;
using namespace pcat;

namespace {

PointRef pointArg(const std::string& name) { return parsePointName(name); }

std::vector<PointRef> pointListArg(const std::vector<std::string>& names) {
  std::vector<PointRef> out;
  for (const auto& n : names) out.push_back(parsePointName(n));
  return out;
}

Corner cornerArg(const std::string& name) {
  if (name == "up_left") return Corner::up_left;
  if (name == "up_right") return Corner::up_right;
  if (name == "down_left") return Corner::down_left;
  if (name == "down_right") return Corner::down_right;
  throw Error("bad corner '" + name + "'");
}

py::dict analysisDict(const Analysis& a) {
  py::dict d;
  auto conv = [](const IntData& s) { return std::vector<int>(s.begin(), s.end()); };
  d["f"] = conv(a.f);
  d["v"] = conv(a.v);
  d["sigma"] = conv(a.sigma);
  d["l"] = conv(a.l);
  d["k"] = conv(a.k);
  d["x"] = conv(a.x);
  const char* cc[2] = {"w", "b"};
  py::dict kd, xd;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      kd[py::str(std::string(cc[i]) + cc[j])] = conv(a.kcc[i][j]);
      xd[py::str(std::string(cc[i]) + cc[j])] = conv(a.xcc[i][j]);
    }
  d["k_refined"] = kd;
  d["x_refined"] = xd;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Workbench for categories of two-colored partitions.";

  py::register_exception<Error>(m, "PcatError");

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const std::string& literal) { return parsePartition(literal); }),
           py::arg("literal"))
      .def_property_readonly("upper_size", &Partition::upperSize)
      .def_property_readonly("lower_size", &Partition::lowerSize)
      .def_property_readonly("total_points", &Partition::totalPoints)
      .def("blocks",
           [](const Partition& p) {
             std::vector<std::vector<std::string>> out;
             for (const auto& blk : p.blocks()) {
               std::vector<std::string> b;
               for (const PointRef& pt : blk) b.push_back(pointName(pt));
               out.push_back(std::move(b));
             }
             return out;
           })
      .def("normalized_color",
           [](const Partition& p, const std::string& pt) {
             return std::string(1, colorChar(p.normalizedColor(pointArg(pt))));
           })
      .def("total_color_sum", [](const Partition& p) { return totalColorSum(p); })
      .def("color_distance",
           [](const Partition& p, const std::string& a, const std::string& b) {
             return colorDistance(p, pointArg(a), pointArg(b));
           })
      .def("__str__", &Partition::toString)
      .def("__repr__", [](const Partition& p) { return "Partition('" + p.toString() + "')"; })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__hash__", [](const Partition& p) { return std::hash<Partition>{}(p); });

  m.def("tensor", &tensor);
  m.def("compose", &compose);
  m.def("involution", &involution);
  m.def("reflect", &reflect);
  m.def("is_projective", &isProjective);
  m.def("rotate", [](const Partition& p, const std::string& corner) {
    return rotate(p, cornerArg(corner));
  });
  m.def("rotate_cyclic", &rotateCyclic);
  m.def("erase_turn", [](const Partition& p, const std::string& a, const std::string& b) {
    return eraseTurn(p, Turn{pointArg(a), pointArg(b)});
  });
  m.def("connect_turn", [](const Partition& p, const std::string& a, const std::string& b) {
    return connectTurn(p, Turn{pointArg(a), pointArg(b)});
  });
  m.def("disconnect_point",
        [](const Partition& p, const std::string& pt) { return disconnectPoint(p, pointArg(pt)); });
  m.def("project", [](const Partition& p, const std::vector<std::string>& pts) {
    return project(p, pointListArg(pts));
  });
  m.def("equivalent", [](const Partition& p1, const std::vector<std::string>& s1,
                         const Partition& p2, const std::vector<std::string>& s2) {
    return equivalent(p1, pointListArg(s1), p2, pointListArg(s2));
  });

  m.def("enumerate_partitions", [](int upper, int lower) {
    std::vector<Partition> out;
    enumeratePartitions(upper, lower, [&](const Partition& p) {
      out.push_back(p);
      return true;
    });
    return out;
  });

  m.def("analyze", [](const std::vector<Partition>& parts) { return analysisDict(analyze(parts)); });
  m.def("analysis_report", [](const std::vector<Partition>& parts, bool refined) {
    return analyze(parts).report(refined);
  }, py::arg("parts"), py::arg("refined") = false);

  m.def(
      "closure",
      [](const std::vector<Partition>& gens, int cap, int rounds) {
        ClosureResult r = closure(gens, ClosureOptions{cap, rounds});
        py::dict d;
        d["members"] = r.members;
        d["rounds"] = r.rounds;
        d["fixpoint"] = r.reachedFixpoint;
        d["case"] = caseName(detectCase(r.members));
        return d;
      },
      py::arg("generators"), py::arg("cap") = 6, py::arg("rounds") = 64);

  m.def("classify_tuple", [](const std::string& spec) -> py::object {
    auto q = classify(QTuple::parse(spec));
    if (!q) return py::none();
    return py::str(q->toString());
  });
  m.def("instantiate_row", [](const std::string& descriptor) {
    return instantiate(QDescriptor::parse(descriptor)).toString();
  });
  m.def("consistent_rows", [](const std::vector<Partition>& parts) {
    std::vector<std::string> out;
    for (const auto& q : consistentRows(analyze(parts))) out.push_back(q.toString());
    return out;
  });

  m.def(
      "run_check",
      [](const std::string& name, int max_points, int cap, int instances, std::uint64_t seed) {
        Budget b;
        b.maxPoints = max_points;
        b.closureCap = cap;
        b.instances = instances;
        b.seed = seed;
        CheckReport r = runCheck(name, b);
        py::dict d;
        d["name"] = r.name;
        d["status"] = r.status == CheckStatus::pass     ? "pass"
                      : r.status == CheckStatus::fail   ? "fail"
                                                        : "skipped";
        d["instances"] = r.instancesTried;
        d["counterexample"] = r.counterexample;
        d["seconds"] = r.elapsedSeconds;
        return d;
      },
      py::arg("name"), py::arg("max_points") = 6, py::arg("cap") = 6, py::arg("instances") = 200,
      py::arg("seed") = 1);
  m.def("check_names", &checkNames);
}
