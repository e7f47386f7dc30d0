// Copyright 2026 isub authors.
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

#include "isub/spec.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace isub {

namespace {

bool finite(double x) { return std::isfinite(x); }

std::vector<double> split_params(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad numeric parameter: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace

SubordinatorSpec SubordinatorSpec::stable(double alpha) {
  SubordinatorSpec s{Family::Stable, alpha, 0.0};
  validate(s);
  return s;
}

SubordinatorSpec SubordinatorSpec::tempered_stable(double alpha, double lambda) {
  SubordinatorSpec s{Family::TemperedStable, alpha, lambda};
  validate(s);
  return s;
}

SubordinatorSpec SubordinatorSpec::inverse_gaussian(double delta, double gamma) {
  SubordinatorSpec s{Family::InverseGaussian, delta, gamma};
  validate(s);
  return s;
}

SubordinatorSpec SubordinatorSpec::gamma(double a, double b) {
  SubordinatorSpec s{Family::Gamma, a, b};
  validate(s);
  return s;
}

void validate(const SubordinatorSpec& spec) {
  switch (spec.family) {
    case Family::Stable:
      if (!finite(spec.p1) || spec.p1 <= 0.0 || spec.p1 >= 1.0)
        throw std::invalid_argument("stable: alpha must lie in (0,1)");
      break;
    case Family::TemperedStable:
      if (!finite(spec.p1) || spec.p1 <= 0.0 || spec.p1 >= 1.0)
        throw std::invalid_argument("tempered: alpha must lie in (0,1)");
      if (!finite(spec.p2) || spec.p2 < 0.0)
        throw std::invalid_argument("tempered: lambda must be >= 0");
      break;
    case Family::InverseGaussian:
      if (!finite(spec.p1) || spec.p1 <= 0.0)
        throw std::invalid_argument("ig: delta must be > 0");
      if (!finite(spec.p2) || spec.p2 < 0.0)
        throw std::invalid_argument("ig: gamma must be >= 0");
      break;
    case Family::Gamma:
      if (!finite(spec.p1) || spec.p1 <= 0.0)
        throw std::invalid_argument("gamma: a must be > 0");
      if (!finite(spec.p2) || spec.p2 <= 0.0)
        throw std::invalid_argument("gamma: b must be > 0");
      break;
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Stable: return "stable";
    case Family::TemperedStable: return "tempered";
    case Family::InverseGaussian: return "ig";
    case Family::Gamma: return "gamma";
  }
  return "?";
}

std::string to_json_string(const SubordinatorSpec& spec) {
  nlohmann::json j;
  j["family"] = family_name(spec.family);
  nlohmann::json p;
  switch (spec.family) {
    case Family::Stable:
      p["alpha"] = spec.p1;
      break;
    case Family::TemperedStable:
      p["alpha"] = spec.p1;
      p["lambda"] = spec.p2;
      break;
    case Family::InverseGaussian:
      p["delta"] = spec.p1;
      p["gamma"] = spec.p2;
      break;
    case Family::Gamma:
      p["a"] = spec.p1;
      p["b"] = spec.p2;
      break;
  }
  j["params"] = p;
  return j.dump();
}

SubordinatorSpec spec_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed spec JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j.contains("params"))
    throw std::invalid_argument("spec JSON needs \"family\" and \"params\"");
  const std::string fam = j["family"].get<std::string>();
  const auto& p = j["params"];
  auto get = [&](const char* key) -> double {
    if (!p.contains(key))
      throw std::invalid_argument(std::string("spec JSON missing param: ") + key);
    return p[key].get<double>();
  };
  if (fam == "stable") return SubordinatorSpec::stable(get("alpha"));
  if (fam == "tempered") return SubordinatorSpec::tempered_stable(get("alpha"), get("lambda"));
  if (fam == "ig") return SubordinatorSpec::inverse_gaussian(get("delta"), get("gamma"));
  if (fam == "gamma") return SubordinatorSpec::gamma(get("a"), get("b"));
  throw std::invalid_argument("unknown family: " + fam);
}

SubordinatorSpec spec_from_mini(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("spec mini-syntax is family:p1[,p2]");
  const std::string fam = text.substr(0, colon);
  const auto params = split_params(text.substr(colon + 1));
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("family " + fam + " takes " + std::to_string(n) +
                                  " parameter(s)");
  };
  if (fam == "stable") {
    need(1);
    return SubordinatorSpec::stable(params[0]);
  }
  if (fam == "tempered") {
    need(2);
    return SubordinatorSpec::tempered_stable(params[0], params[1]);
  }
  if (fam == "ig") {
    need(2);
    return SubordinatorSpec::inverse_gaussian(params[0], params[1]);
  }
  if (fam == "gamma") {
    need(2);
    return SubordinatorSpec::gamma(params[0], params[1]);
  }
  throw std::invalid_argument("unknown family: " + fam);
}

SubordinatorSpec parse_spec(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return spec_from_json_string(text);
  return spec_from_mini(text);
}

std::string to_mini(const SubordinatorSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << family_name(spec.family) << ':' << spec.p1;
  if (spec.family != Family::Stable) os << ',' << spec.p2;
  return os.str();
}

WaitingTimeSpec WaitingTimeSpec::exponential(double rate) {
  WaitingTimeSpec w{Kind::Exponential, rate, 0.0};
  validate(w);
  return w;
}

WaitingTimeSpec WaitingTimeSpec::deterministic(double value) {
  WaitingTimeSpec w{Kind::Deterministic, value, 0.0};
  validate(w);
  return w;
}

WaitingTimeSpec WaitingTimeSpec::gamma(double shape, double scale) {
  WaitingTimeSpec w{Kind::Gamma, shape, scale};
  validate(w);
  return w;
}

void validate(const WaitingTimeSpec& w) {
  if (!finite(w.p1) || w.p1 <= 0.0)
    throw std::invalid_argument("waiting-time parameter must be > 0");
  if (w.kind == WaitingTimeSpec::Kind::Gamma && (!finite(w.p2) || w.p2 <= 0.0))
    throw std::invalid_argument("gamma waiting time needs scale > 0");
}

WaitingTimeSpec parse_waiting(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("waiting mini-syntax is exp:rate | det:value | gamma:shape,scale");
  const std::string kind = text.substr(0, colon);
  const auto params = split_params(text.substr(colon + 1));
  if (kind == "exp" && params.size() == 1) return WaitingTimeSpec::exponential(params[0]);
  if (kind == "det" && params.size() == 1) return WaitingTimeSpec::deterministic(params[0]);
  if (kind == "gamma" && params.size() == 2) return WaitingTimeSpec::gamma(params[0], params[1]);
  throw std::invalid_argument("bad waiting-time spec: " + text);
}

std::string to_mini(const WaitingTimeSpec& w) {
  std::ostringstream os;
  os.precision(17);
  switch (w.kind) {
    case WaitingTimeSpec::Kind::Exponential: os << "exp:" << w.p1; break;
    case WaitingTimeSpec::Kind::Deterministic: os << "det:" << w.p1; break;
    case WaitingTimeSpec::Kind::Gamma: os << "gamma:" << w.p1 << ',' << w.p2; break;
  }
  return os.str();
}

}  // namespace isub
