// Copyright 2026 The Abundancy Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abundancy/json_io.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace abundancy {
namespace {

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return object.at(key);
}

Natural natural_field(const Json& object, const char* key) {
  const Json& v = field(object, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field \"") + key + "\" must be a decimal string");
  return Natural::parse(v.get<std::string>());
}

PositiveRational rational_field(const Json& object, const char* key) {
  const Json& v = field(object, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field \"") + key + "\" must be a string");
  return PositiveRational::parse(v.get<std::string>());
}

std::uint64_t number_field(const Json& object, const char* key) {
  const Json& v = field(object, key);
  if (!v.is_number_unsigned()) throw std::invalid_argument(std::string("field \"") + key + "\" must be a count");
  return v.get<std::uint64_t>();
}

Json params_of(const Certificate& cert) {
  return std::visit(Overloaded{
                        [](const T1Certificate& c) { return Json{{"m", c.m.to_string()}}; },
                        [](const T2Certificate& c) {
                          return Json{{"n", c.n.to_string()}, {"t", c.t.to_string()}, {"j", c.j},
                                      {"p", c.p.to_string()}, {"d", c.d.to_string()}, {"case", c.case_id}};
                        },
                        [](const T3Certificate& c) {
                          return Json{{"n", c.n.to_string()}, {"l", c.l.to_string()}, {"m", c.m.to_string()},
                                      {"j", c.j}, {"p", c.p.to_string()}, {"d", c.d.to_string()}};
                        },
                        [](const PrimePowerCertificate& c) {
                          return Json{{"p", c.p.to_string()}, {"x_src", c.x_src}};
                        },
                    },
                    cert);
}

Json effort_to_json(const EffortBudget& e) {
  return Json{{"witness_bound", e.witness_bound},
              {"divisor_enum_cap", e.divisor_enum_cap},
              {"t_max", e.t_max},
              {"threads", e.threads}};
}

EffortBudget effort_from_json(const Json& j) {
  EffortBudget e;
  e.witness_bound = number_field(j, "witness_bound");
  e.divisor_enum_cap = number_field(j, "divisor_enum_cap");
  e.t_max = number_field(j, "t_max");
  if (j.contains("threads")) e.threads = static_cast<unsigned>(number_field(j, "threads"));
  return e;
}

}  // namespace

Json certificate_to_json(const PositiveRational& q, std::uint32_t x, const Certificate& cert) {
  return Json{{"verdict", "outlaw"},
              {"theorem", std::string(theorem_name(cert))},
              {"q", q.to_string()},
              {"x", x},
              {"params", params_of(cert)}};
}

Certificate certificate_from_json(const Json& record) {
  const Json& th = field(record, "theorem");
  if (!th.is_string()) throw std::invalid_argument("field \"theorem\" must be a string");
  const std::string theorem = th.get<std::string>();
  const Json& p = field(record, "params");
  if (theorem == "T1") return T1Certificate{natural_field(p, "m")};
  if (theorem == "T2") {
    const auto case_id = number_field(p, "case");
    if (case_id != 1 && case_id != 2) throw std::invalid_argument("T2 case must be 1 or 2");
    return T2Certificate{natural_field(p, "n"), natural_field(p, "t"), number_field(p, "j"),
                         natural_field(p, "p"), natural_field(p, "d"), static_cast<int>(case_id)};
  }
  if (theorem == "T3") {
    return T3Certificate{natural_field(p, "n"), natural_field(p, "l"), natural_field(p, "m"),
                         number_field(p, "j"),  natural_field(p, "p"), natural_field(p, "d")};
  }
  if (theorem == "PrimePowerX") {
    const auto x_src = number_field(p, "x_src");
    if (x_src < 2 || x_src > UINT32_MAX) throw std::invalid_argument("x_src out of range");
    return PrimePowerCertificate{natural_field(p, "p"), static_cast<std::uint32_t>(x_src)};
  }
  throw std::invalid_argument("unknown theorem \"" + theorem + "\"");
}

Json classification_to_json(const Classification& c) {
  Json out{{"schema", kSchemaVersion}, {"q", c.q.to_string()}, {"x", c.x},
           {"verdict", std::string(verdict_name(c.verdict))}};
  if (const auto* index = std::get_if<IndexVerdict>(&c.verdict)) {
    out["witness"] = index->witness.to_string();
  } else if (const auto* outlaw = std::get_if<OutlawVerdict>(&c.verdict)) {
    out["certificate"] = certificate_to_json(c.q, c.x, outlaw->certificate);
  }
  out["effort"] = effort_to_json(c.effort);
  out["notes"] = c.notes;
  Json implied = Json::array();
  for (const auto& i : c.implied) {
    implied.push_back({{"value", i.value.to_string()}, {"witness", i.witness.to_string()}, {"rule", i.rule}});
  }
  out["implied"] = std::move(implied);
  return out;
}

Classification classification_from_json(const Json& record) {
  if (const Json& schema = field(record, "schema"); schema != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema " + schema.dump());
  }
  Classification c;
  c.q = rational_field(record, "q");
  const auto x = number_field(record, "x");
  if (x == 0 || x > UINT32_MAX) throw std::invalid_argument("x out of range");
  c.x = static_cast<std::uint32_t>(x);

  const Json& verdict = field(record, "verdict");
  if (verdict == "index") {
    c.verdict = IndexVerdict{natural_field(record, "witness")};
  } else if (verdict == "outlaw") {
    c.verdict = OutlawVerdict{certificate_from_json(field(record, "certificate"))};
  } else if (verdict == "unknown") {
    c.verdict = UnknownVerdict{};
  } else {
    throw std::invalid_argument("unknown verdict " + verdict.dump());
  }
  if (record.contains("effort")) c.effort = effort_from_json(record.at("effort"));
  if (record.contains("notes")) c.notes = record.at("notes").get<std::vector<std::string>>();
  if (record.contains("implied")) {
    for (const Json& i : record.at("implied")) {
      c.implied.push_back({rational_field(i, "value"), natural_field(i, "witness"),
                           field(i, "rule").get<std::string>()});
    }
  }
  return c;
}

Json output_record(std::string_view command, Json inputs, Json result, std::chrono::nanoseconds elapsed) {
  return Json{{"schema", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
}

}  // namespace abundancy
