#include "freeconv/io.hpp"

#include <cstdio>
#include <fstream>

#include "freeconv/errors.hpp"

namespace freeconv {

namespace {

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

MeasureSpec measure_from_json(const nlohmann::json& j, bool renormalize) {
  std::vector<Atom> atoms;
  std::vector<Segment> segments;
  try {
    if (j.contains("atoms"))
      for (const auto& a : j.at("atoms"))
        atoms.push_back({a.at("x").get<double>(), a.at("m").get<double>()});
    if (j.contains("segments"))
      for (const auto& s : j.at("segments")) {
        Segment seg;
        seg.xs = s.at("xs").get<std::vector<double>>();
        seg.ys = s.at("ys").get<std::vector<double>>();
        segments.push_back(std::move(seg));
      }
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_config, std::string("malformed measure JSON: ") + e.what());
  }
  return MeasureSpec::validated(std::move(atoms), std::move(segments), renormalize);
}

MeasureSpec read_measure_file(const std::string& path, bool renormalize) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_config, "cannot open measure file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_config, "cannot parse " + path + ": " + e.what());
  }
  return measure_from_json(j, renormalize);
}

nlohmann::json snapshot_to_json(const SupportSnapshot& snap) {
  nlohmann::json j;
  j["t"] = snap.t;
  j["ac"] = nlohmann::json::array();
  for (const auto& iv : snap.ac.intervals()) j["ac"].push_back({iv.lo, iv.hi});
  j["atoms"] = nlohmann::json::array();
  for (const auto& a : snap.atoms) j["atoms"].push_back({{"x", a.x}, {"m", a.m}});
  j["density"] = nlohmann::json::array();
  for (const auto& s : snap.density.samples) j["density"].push_back({s.u, s.p});
  j["flags"] = snap.flags;
  for (double u : snap.density.singular_points)
    j["flags"].push_back("singular_density:u=" + csv_num(u));
  j["mass"] = {{"ac", snap.ac_moments.mass},
               {"atoms", snap.total_mass() - snap.ac_moments.mass},
               {"total", snap.total_mass()}};
  return j;
}

SupportSnapshot snapshot_from_json(const nlohmann::json& j) {
  SupportSnapshot snap;
  try {
    snap.t = j.at("t").get<double>();
    std::vector<Interval> ivs;
    for (const auto& iv : j.at("ac")) ivs.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    snap.ac = IntervalUnion(std::move(ivs));
    for (const auto& a : j.at("atoms"))
      snap.atoms.push_back({a.at("x").get<double>(), a.at("m").get<double>()});
    if (j.contains("density"))
      for (const auto& s : j.at("density"))
        snap.density.samples.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
    if (j.contains("flags")) snap.flags = j.at("flags").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_config, std::string("malformed snapshot JSON: ") + e.what());
  }
  return snap;
}

SupportSnapshot read_snapshot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_config, "cannot open snapshot file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_config, "cannot parse " + path + ": " + e.what());
  }
  return snapshot_from_json(j);
}

nlohmann::json profile_to_json(const SupportSnapshot& snap) {
  nlohmann::json j;
  j["t"] = snap.t;
  j["density"] = nlohmann::json::array();
  for (const auto& s : snap.density.samples) j["density"].push_back({s.u, s.p});
  j["singular"] = snap.density.singular_points;
  return j;
}

std::string profile_to_csv(const SupportSnapshot& snap) {
  std::string out = "u,p\n";
  for (const auto& s : snap.density.samples)
    out += csv_num(s.u) + "," + csv_num(s.p) + "\n";
  return out;
}

nlohmann::json table_to_json(const ContinuityTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"t", r.t},
                    {"r", r.r},
                    {"d_H", r.d_h},
                    {"refined", r.refined},
                    {"atom_vanishing_nearby", r.atom_vanishing_nearby}});
  return rows;
}

std::string table_to_csv(const ContinuityTable& table) {
  std::string out = "t,r,d_H,refined,atom_vanishing_nearby\n";
  for (const auto& r : table.rows) {
    out += csv_num(r.t) + "," + csv_num(r.r) + "," + csv_num(r.d_h) + ",";
    out += r.refined ? "1," : "0,";
    out += r.atom_vanishing_nearby ? "1\n" : "0\n";
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::bad_config, "cannot write " + tmp);
    out << content;
    if (!out.good()) {
      std::remove(tmp.c_str());
      fail(errc::bad_config, "write failed for " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail(errc::bad_config, "cannot rename into " + path);
  }
}

}  // namespace freeconv
