// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace loewner::io {

namespace {

double parse_double_full(std::string_view text) {
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty()) {
    throw std::invalid_argument("malformed number: '" + buf + "'");
  }
  return v;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

void svg_point(std::ostream& out, std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f %.3f", 400.0 + 380.0 * z.real(),
                400.0 - 380.0 * z.imag());
  out << buf;
}

}  // namespace

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::complex<double> parse_complex(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_double_full(s), 0.0};

  const std::string_view body(s.data(), s.size() - 1);
  // Split before the sign of the imaginary part (not a leading sign, not an
  // exponent sign).
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char ch = body[k];
    if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view re_part, im_part;
  if (split == std::string_view::npos) {
    re_part = {};
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  double im = 1.0;
  if (im_part == "" || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    im = parse_double_full(im_part);
  }
  const double re = re_part.empty() ? 0.0 : parse_double_full(re_part);
  return {re, im};
}

PiecewiseCurve parse_driver_text(std::istream& in) {
  std::vector<DriverKnot> knots;
  Interp interp = Interp::constant;
  bool interp_seen = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line

    if (first.rfind("interp:", 0) == 0) {
      if (interp_seen || !knots.empty()) {
        throw std::invalid_argument(
            "driver file: interp header must appear once, before knots");
      }
      std::string mode = first.substr(7);
      if (mode.empty()) ls >> mode;
      if (mode == "constant") {
        interp = Interp::constant;
      } else if (mode == "linear") {
        interp = Interp::linear;
      } else {
        throw std::invalid_argument("driver file: unknown interp '" + mode +
                                    "'");
      }
      interp_seen = true;
      continue;
    }

    double value = 0.0;
    if (!(ls >> value)) {
      throw std::invalid_argument("driver file: malformed line " +
                                  std::to_string(lineno));
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("driver file: trailing tokens on line " +
                                  std::to_string(lineno));
    }
    knots.push_back({parse_double_full(first), value});
  }
  if (knots.empty()) {
    throw std::invalid_argument("driver file: no knots");
  }
  return PiecewiseCurve(std::move(knots), interp);
}

PiecewiseCurve read_driver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open driver file: " + path);
  return parse_driver_text(in);
}

void write_region_csv(std::ostream& out, const RegionSpec& spec,
                      std::size_t n_per_arc) {
  const auto rows = boundary_samples(spec, n_per_arc);
  out << "t_param,re,im,rho,phi_lifted\n";
  const double denom = rows.size() > 1 ? static_cast<double>(rows.size() - 1)
                                       : 1.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    out << format_g17(static_cast<double>(k) / denom) << ','
        << format_g17(r.point.real()) << ',' << format_g17(r.point.imag())
        << ',' << format_g17(r.rho) << ',' << format_g17(r.phi) << '\n';
  }
}

void write_region_svg(std::ostream& out, const RegionSpec& spec,
                      std::size_t n_per_arc) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n"
         "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n"
         "  <circle cx=\"400\" cy=\"400\" r=\"380\" fill=\"none\" "
         "stroke=\"#202020\" stroke-width=\"1\"/>\n";
  if (!spec.degenerate()) {
    const auto polyline = boundary_polyline(spec, n_per_arc);
    out << "  <path d=\"M ";
    svg_point(out, polyline.front());
    for (std::size_t k = 1; k < polyline.size(); ++k) {
      out << " L ";
      svg_point(out, polyline[k]);
    }
    out << " Z\" fill=\"#4477aa\" fill-opacity=\"0.35\" stroke=\"#4477aa\" "
           "stroke-width=\"1.5\"/>\n";
  }
  out << "  <circle cx=\"400\" cy=\"400\" r=\"2.5\" fill=\"#202020\"/>\n";
  out << "  <circle cx=\"";
  {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", 400.0 + 380.0 * spec.z0().re());
    out << buf << "\" cy=\"";
    std::snprintf(buf, sizeof(buf), "%.3f", 400.0 - 380.0 * spec.z0().im());
    out << buf;
  }
  out << "\" r=\"4\" fill=\"#cc3311\"/>\n</svg>\n";
}

void write_radial_trace_csv(std::ostream& out, const PolarTrace& trace,
                            const CircleDriver& driver) {
  const bool closed_form = driver.kind() != CircleDriver::Kind::piecewise;
  const Sign sign = driver.kind() == CircleDriver::Kind::closed_form_minus
                        ? Sign::minus
                        : Sign::plus;
  out << "t,re,im,rho,phi_lifted,theta_driver";
  if (closed_form) out << ",rho_exact,phi_exact,rho_residual,phi_residual";
  out << '\n';
  for (const TraceSample& s : trace.samples) {
    const DiskPoint w = from_polar(s.rho, s.phi);
    out << format_g17(s.t) << ',' << format_g17(w.re()) << ','
        << format_g17(w.im()) << ',' << format_g17(s.rho) << ','
        << format_g17(s.phi) << ',' << format_g17(driver.theta(s.t));
    if (closed_form) {
      const HypPolar exact = optimal_polar(trace.z0, sign, s.t);
      out << ',' << format_g17(exact.rho) << ',' << format_g17(exact.phi)
          << ',' << format_g17(s.rho - exact.rho) << ','
          << format_g17(s.phi - exact.phi);
    }
    out << '\n';
  }
}

void write_chordal_trace_csv(std::ostream& out, const ChordalTrace& trace,
                             const RealDriver& driver) {
  out << "t,re,im,u_driver\n";
  for (const ChordalSample& s : trace.samples) {
    out << format_g17(s.t) << ',' << format_g17(s.x) << ','
        << format_g17(s.y) << ',' << format_g17(driver.value(s.t)) << '\n';
  }
}

}  // namespace loewner::io
