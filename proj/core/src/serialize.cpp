// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/serialize.hpp"

#include "cubefarey/error.hpp"

namespace cubefarey {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidInput, std::string(what) + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

}  // namespace

Json element_to_json(const FieldElement& x) {
  return Json::array({format_rational(x[0]), format_rational(x[1]), format_rational(x[2])});
}

FieldElement element_from_json(const Json& j) {
  return guarded("field element", [&] {
    if (!j.is_array() || j.size() != 3) throw Error(Errc::InvalidInput, "field element needs 3 coordinates");
    return FieldElement(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]));
  });
}

Json field_to_json(const CubicField& field) {
  const auto& p = field.poly();
  return Json{{"minpoly", Json::array({format_rational(p.c0), format_rational(p.c1), format_rational(p.c2)})},
              {"root", Json::array({format_rational(field.root().lo), format_rational(field.root().hi)})}};
}

FieldPtr field_from_json(const Json& j) {
  return guarded("field", [&] {
    const Json& mp = j.at("minpoly");
    const Json& rt = j.at("root");
    if (!mp.is_array() || mp.size() != 3 || !rt.is_array() || rt.size() != 2)
      throw Error(Errc::InvalidInput, "field needs minpoly[3] and root[2]");
    return CubicField::make({rational_from_json(mp[0]), rational_from_json(mp[1]), rational_from_json(mp[2])},
                            {rational_from_json(rt[0]), rational_from_json(rt[1])});
  });
}

Json matrix_to_json(const IntMatrix3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMatrix3 matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    IntMatrix3 m;
    if (!j.is_array() || j.size() != 3) throw Error(Errc::InvalidInput, "matrix needs 3 rows");
    for (int i = 0; i < 3; ++i) {
      const Json& row = j[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != 3) throw Error(Errc::InvalidInput, "matrix row needs 3 entries");
      for (int k = 0; k < 3; ++k) {
        const Json& v = row[static_cast<std::size_t>(k)];
        m(i, k) = v.is_number_integer() ? Integer(v.get<long>()) : Integer(v.get<std::string>());
      }
    }
    return m;
  });
}

Json orbit_to_json(const OrbitDocument& doc) {
  Json digits = Json::array();
  for (const auto& e : doc.digits) digits.push_back(Json::array({e.i, e.j}));
  Json j{{"field", field_to_json(*doc.field)},
         {"r", doc.r.to_string()},
         {"alpha", element_to_json(doc.alpha)},
         {"beta", element_to_json(doc.beta)},
         {"digits", digits}};
  if (doc.convergents) {
    Json conv = Json::array();
    for (const auto& m : *doc.convergents) conv.push_back(matrix_to_json(m));
    j["convergents"] = conv;
  }
  return j;
}

OrbitDocument orbit_from_json(const Json& j) {
  return guarded("orbit", [&] {
    OrbitDocument doc;
    doc.field = field_from_json(j.at("field"));
    doc.r = ValueExponent::parse(j.at("r").get<std::string>());
    doc.alpha = element_from_json(j.at("alpha"));
    doc.beta = element_from_json(j.at("beta"));
    for (const auto& d : j.at("digits")) {
      if (!d.is_array() || d.size() != 2) throw Error(Errc::InvalidInput, "digit needs [i, j]");
      doc.digits.push_back(IndexPair::make(d[0].get<int>(), d[1].get<int>()));
    }
    if (j.contains("convergents")) {
      std::vector<IntMatrix3> conv;
      for (const auto& m : j.at("convergents")) conv.push_back(matrix_from_json(m));
      doc.convergents = std::move(conv);
    }
    return doc;
  });
}

Json pisot_to_json(const PisotCertificate& cert) {
  Json coeffs = Json::array();
  for (int k = 0; k < 3; ++k) coeffs.push_back(format_rational(cert.poly.coeff(k)));
  Json j{{"charpoly", coeffs},
         {"pisot", cert.pisot},
         {"reason", cert.reason},
         {"real_roots", cert.real_roots},
         {"roots_above_one", cert.roots_above_one}};
  if (cert.dominant)
    j["dominant_root"] = Json::array({format_rational(cert.dominant->lo), format_rational(cert.dominant->hi)});
  return j;
}

Json period_to_json(const PeriodResult& res, const std::optional<PeriodMatrix>& pm,
                    const std::optional<PisotCertificate>& pisot) {
  Json digits = Json::array();
  for (const auto& e : res.digits) digits.push_back(Json::array({e.i, e.j}));
  Json j{{"status", res.found() ? "found" : "cap"}, {"steps", res.digits.size()}, {"digits", digits}};
  if (res.found()) {
    j["preperiod"] = res.preperiod;
    j["period"] = res.period;
  }
  if (pm) {
    j["period_matrix"] = matrix_to_json(pm->matrix);
    j["lambda"] = element_to_json(pm->lambda);
  }
  if (pisot) j["pisot"] = pisot_to_json(*pisot);
  return j;
}

Json patch_to_json(const Patch& patch, const Direction* dir) {
  Json faces = Json::array();
  for (const auto& f : patch) faces.push_back(Json{{"x", Json::array({f.x[0], f.x[1], f.x[2]})}, {"kind", f.kind}});
  Json direction = nullptr;
  if (dir) direction = Json::array({element_to_json(dir->nu[0]), element_to_json(dir->nu[1]), element_to_json(dir->nu[2])});
  return Json{{"direction", direction}, {"faces", faces}};
}

Patch patch_from_json(const Json& j) {
  return guarded("patch", [&] {
    Patch p;
    for (const auto& f : j.at("faces")) {
      const Json& x = f.at("x");
      if (!x.is_array() || x.size() != 3) throw Error(Errc::InvalidInput, "face needs x[3]");
      const int kind = f.at("kind").get<int>();
      if (kind < 0 || kind > 2) throw Error(Errc::InvalidInput, "face kind must be 0, 1 or 2");
      p.insert(Face{{x[0].get<long>(), x[1].get<long>(), x[2].get<long>()}, kind});
    }
    return p;
  });
}

Json survey_row_to_json(const SurveyRow& row) {
  return Json{{"m_or_poly", row.key},   {"status", row.status},     {"preperiod", row.preperiod},
              {"period_len", row.period}, {"charpoly", row.charpoly}, {"pisot", row.pisot},
              {"primitive", row.primitive}, {"dhF_max", row.dh_max},  {"rdhF_max", format_rational(row.rdh_max)}};
}

SurveyRow survey_row_from_json(const Json& j) {
  return guarded("survey row", [&] {
    SurveyRow row;
    row.key = j.at("m_or_poly").get<std::string>();
    row.status = j.at("status").get<std::string>();
    row.preperiod = j.at("preperiod").get<std::size_t>();
    row.period = j.at("period_len").get<std::size_t>();
    row.charpoly = j.at("charpoly").get<std::string>();
    row.pisot = j.at("pisot").get<bool>();
    row.primitive = j.at("primitive").get<bool>();
    row.dh_max = j.at("dhF_max").get<int>();
    row.rdh_max = parse_rational(j.at("rdhF_max").get<std::string>());
    return row;
  });
}

}  // namespace cubefarey
