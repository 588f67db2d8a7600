#include "riskgen/seed_maps.hpp"

#include <numeric>
#include <string>

namespace riskgen {

namespace {

class MapBuilder {
 public:
  explicit MapBuilder(std::string name) { map_.name = std::move(name); }

  // Appends `size` fresh territories as a continent; returns its first id.
  TerritoryId continent(std::string name, int bonus, int size) {
    const TerritoryId first = map_.territory_count;
    Continent c{std::move(name), bonus, {}};
    c.territories.resize(static_cast<size_t>(size));
    std::iota(c.territories.begin(), c.territories.end(), first);
    map_.territory_count += size;
    map_.continents.push_back(std::move(c));
    return first;
  }

  void link(TerritoryId a, TerritoryId b) { map_.edges.emplace_back(a, b); }

  void links(std::initializer_list<Edge> edges) {
    for (const auto& [a, b] : edges) link(a, b);
  }

  MapGraph build() {
    map_.canonicalize();
    return map_;
  }

 private:
  MapGraph map_;
};

// Hub at `first`, rim first+1 .. first+size-1 closed into a cycle.
void wheel(MapBuilder& b, TerritoryId first, int size) {
  const int rim = size - 1;
  for (int i = 0; i < rim; ++i) {
    b.link(first, first + 1 + i);
    b.link(first + 1 + i, first + 1 + (i + 1) % rim);
  }
}

// Path first .. first+size-1 with every vertex joined to `first`.
void fan(MapBuilder& b, TerritoryId first, int size) {
  for (int i = 1; i < size; ++i) {
    b.link(first, first + i);
    if (i + 1 < size) b.link(first + i, first + i + 1);
  }
}

MapGraph wheels_map() {
  MapBuilder b("Wheels");
  const int bonuses[6] = {3, 5, 2, 7, 4, 5};
  const char* names[6] = {"Ashen", "Boreal", "Coral", "Dune", "Ember", "Fjord"};
  TerritoryId first[6];
  for (int c = 0; c < 6; ++c) {
    first[c] = b.continent(names[c], bonuses[c], 7);
    wheel(b, first[c], 7);
  }
  // Rim vertex r of continent c is first[c] + 1 + r. Neighbouring wheels in
  // the ring touch through two consecutive rim vertices.
  for (int c = 0; c < 6; ++c) {
    const int d = (c + 1) % 6;
    b.link(first[c] + 1 + 0, first[d] + 1 + 4);
    b.link(first[c] + 1 + 1, first[d] + 1 + 3);
  }
  return b.build();
}

MapGraph grid_map() {
  MapBuilder b("Grid");
  // 6 rows x 7 columns, cut into three bands of two rows, each split 4 + 3
  // columns. Continent ids are assigned band by band, left block first.
  constexpr int kRows = 6;
  constexpr int kCols = 7;
  const int bonuses[6] = {4, 3, 5, 2, 7, 3};
  const char* names[6] = {"Northwest", "Northeast", "Midwest", "Mideast", "Southwest",
                          "Southeast"};
  int id[kRows][kCols];
  int c = 0;
  for (int band = 0; band < 3; ++band) {
    for (int half = 0; half < 2; ++half, ++c) {
      const int col_begin = half == 0 ? 0 : 4;
      const int col_end = half == 0 ? 4 : kCols;
      TerritoryId next = b.continent(names[c], bonuses[c], 2 * (col_end - col_begin));
      for (int r = 2 * band; r < 2 * band + 2; ++r) {
        for (int col = col_begin; col < col_end; ++col) id[r][col] = next++;
      }
    }
  }
  for (int r = 0; r < kRows; ++r) {
    for (int col = 0; col < kCols; ++col) {
      if (col + 1 < kCols) b.link(id[r][col], id[r][col + 1]);
      if (r + 1 < kRows) b.link(id[r][col], id[r + 1][col]);
      if (r + 1 < kRows && col + 1 < kCols && (r + col) % 2 == 0) {
        b.link(id[r][col], id[r + 1][col + 1]);
      }
    }
  }
  return b.build();
}

MapGraph fans_map() {
  MapBuilder b("Fans");
  const int sizes[6] = {10, 9, 8, 6, 5, 4};
  const int bonuses[6] = {7, 5, 5, 3, 2, 2};
  const char* names[6] = {"Greater Vale", "Highland", "Ironcoast", "Jadewood", "Karst", "Lagoon"};
  TerritoryId first[6];
  for (int c = 0; c < 6; ++c) {
    first[c] = b.continent(names[c], bonuses[c], sizes[c]);
    fan(b, first[c], sizes[c]);
  }
  // Continent tree 0-1, 1-2, 1-3, 3-4, 3-5 and a 0-2 link closing one cycle.
  b.links({{first[0] + 9, first[1] + 1}, {first[0] + 8, first[1] + 1},
           {first[1] + 5, first[2] + 1}, {first[1] + 8, first[3] + 1},
           {first[1] + 7, first[3] + 1}, {first[3] + 5, first[4] + 1},
           {first[3] + 3, first[5] + 3}, {first[0] + 1, first[2] + 7}});
  return b.build();
}

MapGraph annulus_map() {
  MapBuilder b("Annulus");
  // Two concentric 21-cycles; sector s holds positions [start, start+len) of
  // both rings. Ids within a continent: inner positions first, then outer.
  constexpr int kRing = 21;
  const int lengths[6] = {4, 4, 4, 3, 3, 3};
  const int bonuses[6] = {5, 4, 6, 3, 2, 3};
  const char* names[6] = {"Meridian", "Nadir", "Orison", "Perihelion", "Quasar", "Rim"};
  int inner[kRing];
  int outer[kRing];
  int pos = 0;
  for (int s = 0; s < 6; ++s) {
    TerritoryId next = b.continent(names[s], bonuses[s], 2 * lengths[s]);
    for (int i = 0; i < lengths[s]; ++i) inner[pos + i] = next++;
    for (int i = 0; i < lengths[s]; ++i) outer[pos + i] = next++;
    pos += lengths[s];
  }
  for (int i = 0; i < kRing; ++i) {
    const int j = (i + 1) % kRing;
    b.link(inner[i], inner[j]);
    b.link(outer[i], outer[j]);
    b.link(inner[i], outer[i]);
    if (i % 2 == 0) b.link(inner[i], outer[j]);
  }
  return b.build();
}

MapGraph small_9() {
  MapBuilder b("Small 9");
  const TerritoryId a = b.continent("West", 3, 5);
  const TerritoryId e = b.continent("East", 2, 4);
  b.links({{a, a + 1}, {a + 1, a + 2}, {a + 2, a + 3}, {a + 3, a + 4}, {a + 4, a}, {a, a + 2}});
  b.links({{e, e + 1}, {e + 1, e + 2}, {e + 2, e + 3}, {e + 3, e}, {e, e + 2}});
  b.links({{a + 2, e + 1}, {a + 3, e}});
  return b.build();
}

MapGraph small_11() {
  MapBuilder b("Small 11");
  const TerritoryId a = b.continent("Upland", 3, 6);
  const TerritoryId l = b.continent("Lowland", 2, 5);
  for (int i = 0; i < 6; ++i) b.link(a + i, a + (i + 1) % 6);
  b.links({{a, a + 2}, {a, a + 3}, {a + 3, a + 5}});
  for (int i = 0; i < 5; ++i) b.link(l + i, l + (i + 1) % 5);
  b.link(l, l + 2);
  b.links({{a + 2, l}, {a + 3, l}, {a + 4, l + 4}});
  return b.build();
}

MapGraph small_13() {
  MapBuilder b("Small 13");
  const TerritoryId a = b.continent("Harbor", 3, 5);
  const TerritoryId m = b.continent("Marsh", 2, 4);
  const TerritoryId p = b.continent("Peaks", 2, 4);
  for (int i = 0; i < 5; ++i) b.link(a + i, a + (i + 1) % 5);
  b.link(a, a + 2);
  for (int i = 0; i < 4; ++i) b.link(m + i, m + (i + 1) % 4);
  b.link(m, m + 2);
  b.links({{p, p + 1}, {p + 1, p + 2}, {p + 2, p + 3}, {p, p + 2}, {p + 1, p + 3}});
  b.links({{a + 1, m}, {a + 3, p}, {m + 2, p + 3}});
  return b.build();
}

MapGraph small_15() {
  MapBuilder b("Small 15");
  const TerritoryId a = b.continent("Crown", 3, 6);
  const TerritoryId f = b.continent("Forest", 2, 5);
  const TerritoryId s = b.continent("Strand", 1, 4);
  wheel(b, a, 6);
  for (int i = 0; i < 5; ++i) b.link(f + i, f + (i + 1) % 5);
  b.links({{f, f + 2}, {f, f + 3}});
  for (int i = 0; i < 4; ++i) b.link(s + i, s + (i + 1) % 4);
  b.link(s, s + 2);
  b.links({{a + 1, f}, {a + 2, f}, {f + 2, s + 1}, {a + 4, s + 3}});
  return b.build();
}

MapGraph small_17() {
  MapBuilder b("Small 17");
  const TerritoryId a = b.continent("Basin", 3, 7);
  const TerritoryId c = b.continent("Cliffs", 2, 5);
  const TerritoryId d = b.continent("Delta", 2, 5);
  fan(b, a, 7);
  b.link(a + 6, a + 1);
  for (int i = 0; i < 5; ++i) b.link(c + i, c + (i + 1) % 5);
  b.links({{c, c + 2}, {c, c + 3}});
  for (int i = 0; i < 5; ++i) b.link(d + i, d + (i + 1) % 5);
  b.link(d, d + 2);
  b.links({{a + 2, c + 1}, {a + 3, c + 1}, {a + 5, d}, {c + 3, d + 3}});
  return b.build();
}

}  // namespace

MapGraph classic_map() {
  MapBuilder b("Classic");
  const TerritoryId na = b.continent("North America", 5, 9);
  const TerritoryId sa = b.continent("South America", 2, 4);
  const TerritoryId eu = b.continent("Europe", 5, 7);
  const TerritoryId af = b.continent("Africa", 3, 6);
  const TerritoryId as = b.continent("Asia", 7, 12);
  const TerritoryId au = b.continent("Australia", 2, 4);

  // North America
  const TerritoryId alaska = na, northwest = na + 1, greenland = na + 2, alberta = na + 3,
                    ontario = na + 4, quebec = na + 5, western_us = na + 6, eastern_us = na + 7,
                    central_america = na + 8;
  // South America
  const TerritoryId venezuela = sa, peru = sa + 1, brazil = sa + 2, argentina = sa + 3;
  // Europe
  const TerritoryId iceland = eu, scandinavia = eu + 1, ukraine = eu + 2, great_britain = eu + 3,
                    northern_europe = eu + 4, western_europe = eu + 5, southern_europe = eu + 6;
  // Africa
  const TerritoryId north_africa = af, egypt = af + 1, east_africa = af + 2, congo = af + 3,
                    south_africa = af + 4, madagascar = af + 5;
  // Asia
  const TerritoryId ural = as, siberia = as + 1, yakutsk = as + 2, kamchatka = as + 3,
                    irkutsk = as + 4, mongolia = as + 5, japan = as + 6, afghanistan = as + 7,
                    china = as + 8, middle_east = as + 9, india = as + 10, siam = as + 11;
  // Australia
  const TerritoryId indonesia = au, new_guinea = au + 1, western_australia = au + 2,
                    eastern_australia = au + 3;

  b.links({{alaska, northwest},       {alaska, alberta},         {alaska, kamchatka},
           {northwest, alberta},      {northwest, ontario},      {northwest, greenland},
           {greenland, ontario},      {greenland, quebec},       {greenland, iceland},
           {alberta, ontario},        {alberta, western_us},     {ontario, western_us},
           {ontario, eastern_us},     {ontario, quebec},         {quebec, eastern_us},
           {western_us, eastern_us},  {western_us, central_america},
           {eastern_us, central_america},                        {central_america, venezuela},
           {venezuela, peru},         {venezuela, brazil},       {peru, brazil},
           {peru, argentina},         {brazil, argentina},       {brazil, north_africa},
           {iceland, great_britain},  {iceland, scandinavia},    {scandinavia, great_britain},
           {scandinavia, northern_europe},                       {scandinavia, ukraine},
           {ukraine, northern_europe}, {ukraine, southern_europe}, {ukraine, middle_east},
           {ukraine, afghanistan},    {ukraine, ural},           {great_britain, northern_europe},
           {great_britain, western_europe},                      {northern_europe, southern_europe},
           {northern_europe, western_europe},                    {western_europe, southern_europe},
           {western_europe, north_africa},                       {southern_europe, middle_east},
           {southern_europe, egypt},  {southern_europe, north_africa},
           {north_africa, egypt},     {north_africa, east_africa}, {north_africa, congo},
           {egypt, middle_east},      {egypt, east_africa},      {east_africa, congo},
           {east_africa, south_africa}, {east_africa, madagascar}, {east_africa, middle_east},
           {congo, south_africa},     {south_africa, madagascar}, {ural, siberia},
           {ural, china},             {ural, afghanistan},       {siberia, yakutsk},
           {siberia, irkutsk},        {siberia, mongolia},       {siberia, china},
           {yakutsk, kamchatka},      {yakutsk, irkutsk},        {kamchatka, irkutsk},
           {kamchatka, mongolia},     {kamchatka, japan},        {irkutsk, mongolia},
           {mongolia, china},         {mongolia, japan},         {afghanistan, china},
           {afghanistan, india},      {afghanistan, middle_east}, {china, siam},
           {china, india},            {middle_east, india},      {india, siam},
           {siam, indonesia},         {indonesia, new_guinea},   {indonesia, western_australia},
           {new_guinea, eastern_australia},                      {new_guinea, western_australia},
           {western_australia, eastern_australia}});
  return b.build();
}

std::vector<MapGraph> seed_maps() {
  return {classic_map(), wheels_map(), grid_map(),  fans_map(),  annulus_map(),
          small_9(),     small_11(),   small_13(), small_15(), small_17()};
}

}  // namespace riskgen
