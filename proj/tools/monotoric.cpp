#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "monotoric/cohomology.hpp"
#include "monotoric/division.hpp"
#include "monotoric/fan.hpp"
#include "monotoric/io.hpp"
#include "monotoric/sections.hpp"
#include "monotoric/svg.hpp"
#include "monotoric/tracker.hpp"

using namespace monotoric;

namespace {

std::vector<long> parseLongList(const std::string& s) {
  std::vector<long> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) {
    try {
      out.push_back(std::stol(t));
    } catch (const std::exception&) {
      throw InputError("expected an integer list, got '" + s + "'");
    }
  }
  return out;
}

SectionClass parseSection(const Fan& F, const std::string& s) {
  SectionClass nu{parseLongList(s)};
  if (nu.nu.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("section list must have one entry per fan ray");
  }
  return nu;
}

void printPolyhedron(const Polyhedron& P) {
  for (const auto& h : P.inequalities()) {
    std::cout << "  " << repr(h.normal) << " . u >= " << h.offset.str() << "\n";
  }
  if (P.isEmpty()) {
    std::cout << "  (empty)\n";
    return;
  }
  if (P.isBounded()) {
    std::cout << "  vertices:";
    for (const auto& v : P.vertices()) std::cout << " " << repr(v);
    std::cout << "\n  lattice points: " << P.latticePoints(false).size() << "\n";
  } else {
    std::cout << "  (unbounded)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial divisions, toric line-bundle cohomology and superpotential monodromy"};
  app.require_subcommand(1);

  std::string fanPath, divisorName, outPath, model = "all";
  bool json = false;

  // fan validate / fan star
  auto* fan = app.add_subcommand("fan", "fan inspection");
  fan->require_subcommand(1);
  auto* fanValidate = fan->add_subcommand("validate", "validate a fan file and print its flags");
  fanValidate->add_option("file", fanPath, "fan file")->required();
  auto* fanStar = fan->add_subcommand("star", "star of a ray and membership of a point");
  std::string rayStr, pointStr;
  fanStar->add_option("--fan", fanPath)->required();
  fanStar->add_option("--ray", rayStr, "ray as 'a b ...'")->required();
  fanStar->add_option("--point", pointStr, "optional query point 'x y ...'");

  // divisor polytope|ample|class
  auto* divisor = app.add_subcommand("divisor", "divisor polytopes, ampleness, classes");
  divisor->require_subcommand(1);
  auto* divPolytope = divisor->add_subcommand("polytope", "print the divisor polytope");
  divPolytope->add_option("--fan", fanPath)->required();
  divPolytope->add_option("--divisor", divisorName)->required();
  auto* divAmple = divisor->add_subcommand("ample", "test ampleness and print the gradient hull");
  divAmple->add_option("--fan", fanPath)->required();
  divAmple->add_option("--divisor", divisorName)->required();
  std::string d0Name, d1Name;
  auto* divClass = divisor->add_subcommand("class", "compare divisor classes; print Picard rank");
  divClass->add_option("--fan", fanPath)->required();
  divClass->add_option("--d0", d0Name)->required();
  divClass->add_option("--d1", d1Name)->required();

  // division build/check
  auto* division = app.add_subcommand("division", "monomial divisions");
  division->require_subcommand(1);
  std::string mode = "tropical", divisionPath;
  auto* divBuild = division->add_subcommand("build", "construct a division");
  divBuild->add_option("--fan", fanPath)->required();
  divBuild->add_option("--mode", mode, "tropical|norm2d|from-ample");
  divBuild->add_option("--divisor", divisorName, "ample divisor for --mode from-ample");
  std::string slackStr = "0";
  divBuild->add_option("--slack", slackStr, "log-scale slack for --mode tropical (rational)");
  divBuild->add_option("--out", outPath, "write the division file here");
  auto* divCheck = division->add_subcommand("check", "adaptedness of a division to a fan");
  divCheck->add_option("--fan", fanPath)->required();
  divCheck->add_option("division", divisionPath, "division file")->required();

  // cohomology / hom / ring
  auto* coh = app.add_subcommand("cohomology", "graded cohomology of a line bundle");
  coh->add_option("--fan", fanPath)->required();
  coh->add_option("--divisor", divisorName)->required();
  coh->add_option("--model", model, "cech|polytope|points|all");
  coh->add_flag("--json", json, "emit the machine-readable report");

  std::string fromStr, toStr;
  auto* hom = app.add_subcommand("hom", "morphism space between section classes");
  hom->add_option("--fan", fanPath)->required();
  hom->add_option("--from", fromStr, "source class 'v1 v2 ...'")->required();
  hom->add_option("--to", toStr, "target class")->required();
  hom->add_option("--model", model);
  hom->add_flag("--json", json);

  int kmax = 2;
  auto* ring = app.add_subcommand("ring", "section ring of an ample divisor");
  ring->add_option("--fan", fanPath)->required();
  ring->add_option("--divisor", divisorName)->required();
  ring->add_option("--kmax", kmax)->required();

  // monodromy twist
  auto* monodromy = app.add_subcommand("monodromy", "monodromy functors on section classes");
  monodromy->require_subcommand(1);
  std::string sectionStr;
  auto* twist = monodromy->add_subcommand("twist", "apply the twist of a divisor to a class");
  twist->add_option("--fan", fanPath)->required();
  twist->add_option("--divisor", divisorName)->required();
  twist->add_option("--section", sectionStr)->required();

  // localize
  std::string cutName, bundleName;
  long boxR = 3;
  auto* localizeCmd = app.add_subcommand("localize", "stabilized sections on the complement of a cut");
  localizeCmd->add_option("--fan", fanPath)->required();
  localizeCmd->add_option("--cut", cutName)->required();
  localizeCmd->add_option("--bundle", bundleName)->required();
  localizeCmd->add_option("--box", boxR, "weight box radius R (box [-R,R]^n)")->required();
  localizeCmd->add_flag("--json", json);

  // track
  int steps = 256;
  std::string twistName;
  auto* track = app.add_subcommand("track", "critical-value monodromy of the coefficient rotation");
  track->add_option("--fan", fanPath)->required();
  track->add_option("--twist", twistName, "twist divisor name")->required();
  track->add_option("--steps", steps);
  track->add_option("--out", outPath, "write the (theta, values) table here");
  int expected = 0;
  track->add_option("--expected", expected, "expected number of critical points");
  std::string trackPlotPath;
  track->add_option("--plot", trackPlotPath, "also draw the value paths to this SVG file");

  // plot
  std::string plotDivisionPath;
  std::string radius = "5";
  auto* plot = app.add_subcommand("plot", "SVG figure of a 2D fan and division regions");
  plot->add_option("--fan", fanPath)->required();
  plot->add_option("--division", plotDivisionPath);
  plot->add_option("--out", outPath)->required();
  plot->add_option("--radius", radius, "view box radius (rational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (fanValidate->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      FanFlags fl = doc.fan.flags();
      std::cout << (fl.complete ? "complete" : "not complete") << " "
                << (fl.simplicial ? "simplicial" : "not simplicial") << " "
                << (fl.smooth ? "smooth" : "not smooth") << "\n";
    } else if (fanStar->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      IntVec ray = fromStd(parseLongList(rayStr));
      int idx = doc.fan.rayIndex(ray);
      if (idx < 0) throw InputError("'" + rayStr + "' is not a ray of the fan");
      std::cout << "star cones:";
      for (int c : doc.fan.star(idx)) {
        std::cout << " {";
        bool first = true;
        for (int r : doc.fan.maxCones()[static_cast<size_t>(c)]) {
          std::cout << (first ? "" : ",") << repr(doc.fan.ray(r));
          first = false;
        }
        std::cout << "}";
      }
      std::cout << "\n";
      if (!pointStr.empty()) {
        RatVec v = toRat(fromStd(parseLongList(pointStr)));
        auto sm = doc.fan.starMembership(idx, v);
        std::cout << "point " << pointStr << ": "
                  << (sm == Fan::StarMembership::interior   ? "interior"
                      : sm == Fan::StarMembership::boundary ? "boundary"
                                                            : "outside")
                  << "\n";
      }
    } else if (divPolytope->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      std::cout << "polytope of " << divisorName << ":\n";
      printPolyhedron(divisorPolytope(doc.fan, doc.divisor(divisorName)));
    } else if (divAmple->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      bool ample = isAmple(doc.fan, doc.divisor(divisorName));
      std::cout << divisorName << (ample ? " is ample" : " is not ample") << "\n";
      if (ample) {
        std::cout << "gradient hull (= divisor polytope):\n";
        printPolyhedron(gradientHull(doc.fan, doc.divisor(divisorName)));
      }
    } else if (divClass->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      bool eq = picClassEq(doc.fan, doc.divisor(d0Name), doc.divisor(d1Name));
      std::cout << d0Name << " and " << d1Name << (eq ? " define the same class" : " differ") << "\n";
      std::cout << "picard rank: " << picRank(doc.fan) << "\n";
    } else if (divBuild->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      MonomialDivision d;
      if (mode == "tropical") {
        d = MonomialDivision::tropical(doc.fan.rays(), Rational::parse(slackStr));
      } else if (mode == "norm2d") {
        d = exponents2d(doc.fan);
      } else if (mode == "from-ample") {
        if (divisorName.empty()) throw InputError("--mode from-ample needs --divisor");
        d = exponentsFromAmple(doc.fan, doc.divisor(divisorName));
      } else {
        throw InputError("unknown division mode '" + mode + "'");
      }
      std::ostringstream os;
      os << "k:";
      for (const auto& v : d.k) os << " " << v.str();
      os << "\nlogc:";
      for (const auto& v : d.logc) os << " " << v.str();
      os << "\nslack: " << d.slack.str() << "\n";
      if (outPath.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream out(resolveOutputPath(outPath));
        if (!out) throw InputError("cannot open '" + outPath + "'");
        out << os.str();
        std::cout << "wrote " << outPath << "\n";
      }
      AdaptednessReport rep = isAdapted(d, doc.fan);
      std::cout << (rep.adapted ? "ADAPTED" : "NOT ADAPTED") << "\n";
    } else if (divCheck->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      MonomialDivision d = loadDivisionFile(divisionPath, doc.fan.rays());
      AdaptednessReport rep = isAdapted(d, doc.fan);
      if (rep.adapted) {
        std::cout << "ADAPTED\n";
      } else {
        for (const auto& w : rep.witnesses) {
          std::cout << "NOT ADAPTED: witness alpha=" << repr(d.rays[static_cast<size_t>(w.rayIdx)])
                    << " sigma={";
          bool first = true;
          for (int r : doc.fan.maxCones()[static_cast<size_t>(w.coneIdx)]) {
            std::cout << (first ? "" : ",") << repr(doc.fan.ray(r));
            first = false;
          }
          std::cout << "} direction=" << repr(w.direction) << "\n";
        }
      }
    } else if (coh->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      CohomologyEngine eng(doc.fan);
      GradedHom h = eng.divisorCohomology(doc.divisor(divisorName), modelFromString(model));
      if (json) {
        std::vector<std::string> verified = {"shell weights vanish"};
        if (modelFromString(model) == Model::all) {
          verified.push_back("cech and polytope models agree at every (weight, degree)");
        }
        std::cout << gradedHomReportJson(h, verified);
      } else {
        writeGradedHomTable(std::cout, h);
        if (modelFromString(model) == Model::all) std::cout << "models agree\n";
      }
    } else if (hom->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      CohomologyEngine eng(doc.fan);
      GradedHom h = eng.hom(parseSection(doc.fan, fromStr), parseSection(doc.fan, toStr),
                            modelFromString(model));
      if (json) {
        std::vector<std::string> verified = {"shell weights vanish"};
        if (modelFromString(model) == Model::all) {
          verified.push_back("cech and polytope models agree at every (weight, degree)");
        }
        std::cout << gradedHomReportJson(h, verified);
      } else {
        writeGradedHomTable(std::cout, h);
      }
    } else if (ring->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      SectionRing R = sectionRing(doc.fan, doc.divisor(divisorName), kmax);
      std::cout << "dims:";
      for (long d : R.dims()) std::cout << " " << d;
      std::cout << "\nproduct: (p,q) -> p+q with unit coefficient; closure and "
                   "associativity verified\n";
    } else if (twist->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      MonodromyFunctor f{doc.divisor(divisorName)};
      SectionClass nu = parseSection(doc.fan, sectionStr);
      SectionClass out = monodromyApply(f, nu);
      std::cout << "twisted class:";
      for (long v : out.nu) std::cout << " " << v;
      std::cout << "\n";
    } else if (localizeCmd->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      std::vector<std::pair<long, long>> box(static_cast<size_t>(doc.fan.dim()), {-boxR, boxR});
      LocalizationResult res = localize(doc.fan, doc.divisor(cutName), doc.divisor(bundleName), box);
      if (json) {
        nlohmann::json j;
        j["verified"] = {res.crossCheckOk ? "subfan cech cross-check agrees"
                                          : "subfan cech cross-check FAILED"};
        nlohmann::json entries = nlohmann::json::array();
        for (size_t i = 0; i < res.weights.size(); ++i) {
          entries.push_back({{"weight", toStd(res.weights[i])},
                             {"dim", res.stabilizedDim[i]},
                             {"stable_at", res.stabilizationIndex[i]}});
        }
        j["entries"] = entries;
        std::cout << j.dump(2) << "\n";
      } else {
        for (size_t i = 0; i < res.weights.size(); ++i) {
          std::cout << repr(res.weights[i]) << "\tdim " << res.stabilizedDim[i]
                    << "\tstable at k>=" << res.stabilizationIndex[i] << "\tsubfan "
                    << res.subfanCech[i] << "\n";
        }
        std::cout << (res.crossCheckOk ? "subfan cross-check agrees" : "subfan cross-check FAILED")
                  << "\n";
      }
      if (!res.crossCheckOk) throw ComputationError("localization cross-check failed");
    } else if (track->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      const ToricDivisor& tw = doc.divisor(twistName);
      SuperpotentialConfig cfg;
      cfg.rays = doc.fan.rays();
      cfg.coeffs.assign(cfg.rays.size(), 1.0);
      cfg.twist = tw.coeffs;
      cfg.steps = steps;
      cfg.expectedCriticalPoints = expected;
      MonodromyTrace tr = trackMonodromy(cfg);
      std::ostringstream os;
      os << "# theta";
      for (size_t p = 0; p < tr.values.size(); ++p) os << "\tre" << p << "\tim" << p;
      os << "\n";
      for (size_t s = 0; s < tr.thetas[0].size(); ++s) {
        os << tr.thetas[0][s];
        for (size_t p = 0; p < tr.values.size(); ++p) {
          os << "\t" << tr.values[p][s].real() << "\t" << tr.values[p][s].imag();
        }
        os << "\n";
      }
      os << "# permutation:";
      for (int v : tr.permutation) os << " " << v;
      os << "\n# windings:";
      for (double w : tr.windings) os << " " << w;
      os << "\n# max residual: " << tr.maxResidual << "\n";
      if (!trackPlotPath.empty()) {
        writeValuePathsSvg(trackPlotPath, tr.values);
        std::cout << "wrote " << trackPlotPath << "\n";
      }
      if (outPath.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream out(resolveOutputPath(outPath));
        if (!out) throw InputError("cannot open '" + outPath + "'");
        out << os.str();
        std::cout << "wrote " << outPath << "\n";
        std::cout << "permutation:";
        for (int v : tr.permutation) std::cout << " " << v;
        std::cout << "\nwindings:";
        for (double w : tr.windings) std::cout << " " << w;
        std::cout << "\n";
      }
    } else if (plot->parsed()) {
      FanDocument doc = loadFanFile(fanPath);
      std::optional<MonomialDivision> d;
      if (!plotDivisionPath.empty()) d = loadDivisionFile(plotDivisionPath, doc.fan.rays());
      writeDivisionSvg(outPath, doc.fan, d, Rational::parse(radius));
      std::cout << "wrote " << outPath << "\n";
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
