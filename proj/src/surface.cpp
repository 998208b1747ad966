#include "dtc/surface.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace dtc {

void CoordinateDatum::finalize() {
  curve_slots.assign(curve_count(), {BoundarySlot{}, BoundarySlot{}});
  std::vector<int> seen(curve_count(), 0);
  for (int p = 0; p < static_cast<int>(pants.size()); ++p) {
    for (int pos = 0; pos < 3; ++pos) {
      CurveId c = pants[p][pos];
      if (c < 0 || c >= curve_count()) continue;  // validate() reports this
      if (seen[c] < 2) curve_slots[c][seen[c]] = BoundarySlot{p, pos, c};
      ++seen[c];
    }
  }
}

std::vector<DatumIssue> validate(const CoordinateDatum& datum) {
  std::vector<DatumIssue> issues;
  auto add = [&](Err code, const std::string& d) { issues.push_back({code, d}); };

  if (datum.genus < 2) {
    add(Err::UnsupportedGenus, "genus must be at least 2, got " + std::to_string(datum.genus));
    return issues;
  }
  const int nc = datum.curve_count();
  if (static_cast<int>(datum.pants.size()) != datum.pants_count()) {
    add(Err::NonTrivalent, "expected " + std::to_string(datum.pants_count()) + " pants, got " +
                               std::to_string(datum.pants.size()));
  }

  std::vector<int> slot_count(nc, 0);
  for (int p = 0; p < static_cast<int>(datum.pants.size()); ++p) {
    for (int pos = 0; pos < 3; ++pos) {
      CurveId c = datum.pants[p][pos];
      if (c < 0 || c >= nc) {
        add(Err::BadSlotCount,
            "pants " + std::to_string(p) + " references curve " + std::to_string(c) +
                " outside [0," + std::to_string(nc - 1) + "]");
        continue;
      }
      ++slot_count[c];
    }
  }
  for (CurveId c = 0; c < nc; ++c) {
    if (slot_count[c] != 2) {
      add(Err::BadSlotCount, "curve " + std::to_string(c) + " occupies " +
                                 std::to_string(slot_count[c]) + " slots, expected 2");
    }
  }
  if (!issues.empty()) return issues;

  // Dual graph connectivity: pants are vertices, curves are edges.
  std::vector<std::array<int, 2>> ends(nc, {-1, -1});
  for (int p = 0; p < static_cast<int>(datum.pants.size()); ++p)
    for (int pos = 0; pos < 3; ++pos) {
      auto& e = ends[datum.pants[p][pos]];
      (e[0] < 0 ? e[0] : e[1]) = p;
    }
  std::vector<char> reach(datum.pants.size(), 0);
  std::queue<int> bfs;
  bfs.push(0);
  reach[0] = 1;
  while (!bfs.empty()) {
    int p = bfs.front();
    bfs.pop();
    for (int pos = 0; pos < 3; ++pos) {
      for (int q : ends[datum.pants[p][pos]]) {
        if (!reach[q]) {
          reach[q] = 1;
          bfs.push(q);
        }
      }
    }
  }
  for (int p = 0; p < static_cast<int>(datum.pants.size()); ++p) {
    if (!reach[p]) {
      add(Err::Disconnected, "pants " + std::to_string(p) + " is unreachable from pants 0");
    }
  }
  return issues;
}

void require_valid(const CoordinateDatum& datum) {
  auto issues = validate(datum);
  if (issues.empty()) return;
  std::string msg = "invalid coordinate datum:";
  for (auto& i : issues) msg += " [" + std::string(err_name(i.code)) + "] " + i.detail + ";";
  throw std::invalid_argument(msg);
}

CurveLocalModel local_model(const CoordinateDatum& datum, CurveId a) {
  DTC_CHECK(!datum.curve_slots.empty(), "datum not finalized");
  DTC_CHECK(a >= 0 && a < datum.curve_count(), "curve id out of range");
  const auto& slots = datum.curve_slots[a];

  auto slot_at = [&](int p, int pos) {
    return BoundarySlot{p, pos, datum.pants[p][pos]};
  };

  CurveLocalModel m;
  if (slots[0].pants == slots[1].pants) {
    m.folded = true;
    m.one.pants = slots[0].pants;
    int third = 3 - slots[0].position - slots[1].position;
    m.one.a1 = slot_at(slots[0].pants, third);
    return m;
  }

  m.folded = false;
  m.two.f_plus = slots[0].pants;
  m.two.f_minus = slots[1].pants;
  m.two.self = {slots[0], slots[1]};
  // In f_plus the label-1 neighbor precedes the curve's slot counter-clockwise
  // and label-4 follows; in f_minus label-2 follows and label-3 precedes. The
  // U-arcs wrapping the curve therefore sit on the label-1 and label-3 slots.
  m.two.nbr[0] = slot_at(slots[0].pants, (slots[0].position + 2) % 3);
  m.two.nbr[3] = slot_at(slots[0].pants, (slots[0].position + 1) % 3);
  m.two.nbr[1] = slot_at(slots[1].pants, (slots[1].position + 1) % 3);
  m.two.nbr[2] = slot_at(slots[1].pants, (slots[1].position + 2) % 3);
  return m;
}

Outcome<CoordinateDatum> generate_standard_datum(int genus, DatumStyle style) {
  if (genus < 2) {
    return make_err(Err::UnsupportedGenus, "genus must be > 1, got " + std::to_string(genus));
  }
  CoordinateDatum d;
  d.genus = genus;
  if (style == DatumStyle::Chain) {
    if (genus == 2) {
      d.pants = {{0, 1, 2}, {0, 2, 1}};
    } else {
      // Circular ladder: two (g-1)-cycles of pants joined by rungs.
      int k = genus - 1;
      auto ea = [&](int i) { return (i % k + k) % k; };
      auto eb = [&](int i) { return k + (i % k + k) % k; };
      auto rung = [&](int i) { return 2 * k + i; };
      for (int i = 0; i < k; ++i) d.pants.push_back({ea(i - 1), rung(i), ea(i)});
      for (int i = 0; i < k; ++i) d.pants.push_back({eb(i), rung(i), eb(i - 1)});
    }
  } else {
    // Handles: g-1 folded pants, each feeding a spine pants; spine pants in a
    // cycle. For g=2 this degenerates to the two-folded-pants dumbbell.
    int k = genus - 1;
    auto loop = [&](int i) { return i; };
    auto stub = [&](int i) { return k + i; };
    auto cyc = [&](int i) { return 2 * k + (i % k + k) % k; };
    for (int i = 0; i < k; ++i) d.pants.push_back({loop(i), loop(i), stub(i)});
    for (int i = 0; i < k; ++i) d.pants.push_back({cyc(i - 1), stub(i), cyc(i)});
  }
  d.finalize();
  require_valid(d);
  return d;
}

std::string datum_to_json(const CoordinateDatum& datum) {
  nlohmann::json j;
  j["schema"] = "dtc.datum.v1";
  j["genus"] = datum.genus;
  auto arr = nlohmann::json::array();
  for (const auto& p : datum.pants) arr.push_back({p[0], p[1], p[2]});
  j["pants"] = arr;
  return j.dump();
}

Outcome<CoordinateDatum> datum_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return make_err(Err::BadInput, "datum file is not valid JSON");
  if (!j.contains("schema") || j["schema"] != "dtc.datum.v1") {
    return make_err(Err::BadInput, "unknown datum schema (want dtc.datum.v1)");
  }
  if (!j.contains("genus") || !j["genus"].is_number_integer() || !j.contains("pants") ||
      !j["pants"].is_array()) {
    return make_err(Err::BadInput, "datum needs integer 'genus' and array 'pants'");
  }
  CoordinateDatum d;
  d.genus = j["genus"].get<int>();
  for (const auto& row : j["pants"]) {
    if (!row.is_array() || row.size() != 3) {
      return make_err(Err::NonTrivalent, "each pants must list exactly 3 boundary curves");
    }
    d.pants.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
  }
  d.finalize();
  auto issues = validate(d);
  if (!issues.empty()) {
    std::string msg;
    for (auto& i : issues) msg += std::string(err_name(i.code)) + ": " + i.detail + "; ";
    return make_err(issues.front().code, msg);
  }
  return d;
}

}  // namespace dtc
