// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/survey.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cubefarey/error.hpp"
#include "cubefarey/families.hpp"

namespace cubefarey {

const char* const kSurveyCsvHeader =
    "m_or_poly,status,preperiod,period_len,charpoly(c0;c1;c2),pisot,primitive,dhF_max,rdhF_max";

std::string SurveyRow::to_csv() const {
  std::ostringstream os;
  os << key << ',' << status << ',' << preperiod << ',' << period << ',' << charpoly << ','
     << (pisot ? "yes" : "no") << ',' << (primitive ? "yes" : "no") << ',' << dh_max << ','
     << format_rational(rdh_max);
  return os.str();
}

SurveyRow SurveyRow::from_csv(const std::string& line) {
  std::vector<std::string> f;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    f.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (f.size() != 9) throw Error(Errc::IoError, "malformed survey row: " + line);
  SurveyRow row;
  try {
    row.key = f[0];
    row.status = f[1];
    row.preperiod = std::stoul(f[2]);
    row.period = std::stoul(f[3]);
    row.charpoly = f[4];
    row.pisot = f[5] == "yes";
    row.primitive = f[6] == "yes";
    row.dh_max = std::stoi(f[7]);
    row.rdh_max = parse_rational(f[8]);
  } catch (const std::logic_error&) {
    throw Error(Errc::IoError, "malformed survey row: " + line);
  } catch (const Error&) {
    throw Error(Errc::IoError, "malformed survey row: " + line);
  }
  return row;
}

SurveyRow survey_point(const std::string& key, const PointPair& point, const ValueExponent& r, std::size_t cap) {
  SurveyRow row;
  row.key = key;
  try {
    const PeriodResult res = detect_period(point, r, cap);
    if (!res.found()) {
      row.status = "cap";
      return row;
    }
    row.status = "found";
    row.preperiod = res.preperiod;
    row.period = res.period;
    const PeriodMatrix pm = period_matrix(res);
    row.charpoly = pm.charpoly.coeff(0).get_str() + ";" + pm.charpoly.coeff(1).get_str() + ";" +
                   pm.charpoly.coeff(2).get_str();
    row.pisot = is_pisot(pm.charpoly).pisot;
    row.primitive = pm.matrix.all_nonnegative() && is_primitive(pm.matrix);
    const int h0 = state_height(res.states.front());
    for (const auto& s : res.states) row.dh_max = std::max(row.dh_max, state_height(s));
    row.rdh_max = Rational(row.dh_max, h0);
    row.rdh_max.canonicalize();
  } catch (const Error& e) {
    row = SurveyRow{};
    row.key = key;
    row.status = "error:" + std::string(to_string(e.code()));
  }
  return row;
}

namespace {

std::vector<SurveyRow> load_existing(const std::filesystem::path& path, const std::vector<SurveyItem>& items) {
  std::vector<SurveyRow> rows;
  if (!std::filesystem::exists(path)) return rows;
  std::string content;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  const auto last_nl = content.rfind('\n');
  const std::size_t keep = last_nl == std::string::npos ? 0 : last_nl + 1;
  if (keep != content.size()) {
    std::filesystem::resize_file(path, keep);
    content.resize(keep);
  }
  std::istringstream lines(content);
  std::string line;
  bool header = true;
  while (std::getline(lines, line)) {
    if (header) {
      if (line != kSurveyCsvHeader) throw Error(Errc::IoError, path.string() + " is not a survey file");
      header = false;
      continue;
    }
    SurveyRow row = SurveyRow::from_csv(line);
    if (rows.size() >= items.size() || items[rows.size()].key != row.key)
      throw Error(Errc::IoError, path.string() + " belongs to a different survey (row " + row.key + ")");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<SurveyRow> run_survey(const std::vector<SurveyItem>& items, const SurveyOptions& opts) {
  std::vector<SurveyRow> rows;
  std::ofstream out;
  if (opts.csv) {
    rows = load_existing(*opts.csv, items);
    const bool fresh = !std::filesystem::exists(*opts.csv) || std::filesystem::file_size(*opts.csv) == 0;
    out.open(*opts.csv, std::ios::binary | std::ios::app);
    if (!out) throw Error(Errc::IoError, "cannot open " + opts.csv->string());
    if (fresh) out << kSurveyCsvHeader << '\n' << std::flush;
  }
  if (opts.on_row)
    for (const auto& row : rows) opts.on_row(row);

  const std::size_t first = rows.size();
  const std::size_t total = items.size();
  std::vector<std::optional<SurveyRow>> pending(total - first);
  std::mutex mu;
  std::size_t next_commit = first;
  std::atomic<std::size_t> next_item{first};

  auto commit_ready = [&]() {
    while (next_commit < total && pending[next_commit - first]) {
      SurveyRow& row = *pending[next_commit - first];
      if (out.is_open()) {
        out << row.to_csv() << '\n' << std::flush;
        if (!out) throw Error(Errc::IoError, "write failed for " + opts.csv->string());
      }
      if (opts.on_row) opts.on_row(row);
      rows.push_back(std::move(row));
      pending[next_commit - first].reset();
      ++next_commit;
    }
  };

  auto worker = [&]() {
    while (true) {
      const std::size_t k = next_item.fetch_add(1);
      if (k >= total) return;
      SurveyRow row;
      try {
        row = survey_point(items[k].key, items[k].make_point(), opts.r, opts.cap);
      } catch (const Error& e) {
        row.key = items[k].key;
        row.status = "error:" + std::string(to_string(e.code()));
      }
      std::lock_guard<std::mutex> lock(mu);
      pending[k - first] = std::move(row);
      commit_ready();
    }
  };

  const unsigned n = std::max(1U, opts.workers);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex fail_mu;
    for (unsigned i = 0; i < n; ++i)
      pool.emplace_back([&]() {
        try {
          worker();
        } catch (...) {
          std::lock_guard<std::mutex> lock(fail_mu);
          if (!failure) failure = std::current_exception();
          next_item.store(total);
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

std::vector<SurveyItem> pure_cubic_items(long m_lo, long m_hi) {
  if (m_lo < 2 || m_hi < m_lo) throw Error(Errc::InvalidInput, "pure cubic range needs 2 <= lo <= hi");
  std::vector<SurveyItem> items;
  for (long m = m_lo; m <= m_hi; ++m) {
    if (is_perfect_cube(m)) continue;
    items.push_back({std::to_string(m), [m]() { return purecubic_point(m); }});
  }
  return items;
}

std::vector<SurveyItem> polynomial_family_items(long t) {
  if (t < 1) throw Error(Errc::InvalidInput, "family bound t must be >= 1");
  std::vector<SurveyItem> items;
  for (long a2 = -t; a2 <= t; ++a2)
    for (long a1 = -t; a1 <= t; ++a1)
      for (long a0 = -t; a0 <= t; ++a0) {
        const CubicPolynomial poly{Rational(a0), Rational(a1), Rational(a2)};
        if (!poly.is_irreducible()) continue;
        if (SturmSequence(poly.as_polynomial()).count_roots_above(Rational(0)) == 0) continue;
        std::string key = std::to_string(a0) + ";" + std::to_string(a1) + ";" + std::to_string(a2);
        items.push_back({std::move(key), [poly]() { return nt_basis_point(poly); }});
      }
  return items;
}

std::string PureCubicSummary::to_string() const {
  return "L_A=" + std::to_string(L_A) + " H_A=" + std::to_string(H_A) + " R_A=" + R_A.get_str();
}

PureCubicSummary summarize_pure_cubics(const std::vector<SurveyRow>& rows) {
  PureCubicSummary s;
  for (const auto& row : rows) {
    ++s.count;
    if (!row.found()) continue;
    ++s.periodic;
    s.L_A = std::max(s.L_A, row.period);
    s.H_A = std::max(s.H_A, row.dh_max);
    if (row.rdh_max > s.R_A) s.R_A = row.rdh_max;
  }
  return s;
}

std::string FamilySummary::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " p=" << p << " c=" << c << " r=" << r << " s=" << s << " rh=" << rh.get_str();
  return os.str();
}

Rational discriminant(const CubicPolynomial& poly) {
  const Rational& b = poly.c2;
  const Rational& c = poly.c1;
  const Rational& d = poly.c0;
  return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

FamilySummary summarize_family(const std::vector<SurveyRow>& rows) {
  FamilySummary s;
  for (const auto& row : rows) {
    ++s.n;
    std::string key = row.key;
    std::replace(key.begin(), key.end(), ';', ',');
    if (sgn(discriminant(parse_cubic(key))) < 0) ++s.c;
    else ++s.r;
    if (!row.found()) continue;
    ++s.p;
    if (row.pisot) ++s.s;
    if (row.rdh_max > s.rh) s.rh = row.rdh_max;
  }
  return s;
}

}  // namespace cubefarey
