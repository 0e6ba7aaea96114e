#include "bicat/examples.hpp"

#include <map>
#include <stdexcept>

#include "core/labelled.hpp"

namespace globcat::bicat {

Bicategory two_object_strict() {
  Bicategory b;
  b.objects = {"x", "y"};
  b.ones = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"a", "x", "y"},
            {"b", "x", "y"}};
  b.twos = {{"i1x", "1x", "1x"},
            {"i1y", "1y", "1y"},
            {"ia", "a", "a"},
            {"ib", "b", "b"},
            {"g", "a", "b"}};
  b.id1 = {{"x", "1x"}, {"y", "1y"}};
  b.id2 = {{"1x", "i1x"}, {"1y", "i1y"}, {"a", "ia"}, {"b", "ib"}};
  b.hcomp1 = {{{"1x", "1x"}, "1x"}, {{"1y", "1y"}, "1y"},
              {{"a", "1x"}, "a"},   {{"1y", "a"}, "a"},
              {{"b", "1x"}, "b"},   {{"1y", "b"}, "b"}};
  b.vcomp2 = {{{"i1x", "i1x"}, "i1x"}, {{"i1y", "i1y"}, "i1y"},
              {{"ia", "ia"}, "ia"},    {{"ib", "ib"}, "ib"},
              {{"g", "ia"}, "g"},      {{"ib", "g"}, "g"}};
  b.hcomp2 = {{{"i1x", "i1x"}, "i1x"}, {{"i1y", "i1y"}, "i1y"},
              {{"ia", "i1x"}, "ia"},   {{"ib", "i1x"}, "ib"},
              {{"g", "i1x"}, "g"},     {{"i1y", "ia"}, "ia"},
              {{"i1y", "ib"}, "ib"},   {{"i1y", "g"}, "g"}};
  complete_strict_constraints(b);
  return b;
}

Bicategory cocycle_bicategory(const CocycleData& d) {
  Bicategory b;
  b.objects = {"*"};
  auto two_id = [](const std::string& m, const std::string& g) {
    return m + "@" + g;
  };
  for (const auto& g : d.group) {
    b.ones.push_back({g, "*", "*"});
    for (const auto& m : d.module) b.twos.push_back({two_id(m, g), g, g});
    b.id2[g] = two_id(d.zero, g);
  }
  b.id1["*"] = d.unit;
  for (const auto& h : d.group)
    for (const auto& g : d.group) b.hcomp1[{h, g}] = d.mult.at({h, g});
  auto parse = [](const std::string& id) {
    auto at = id.find('@');
    return std::pair<std::string, std::string>(id.substr(0, at),
                                               id.substr(at + 1));
  };
  for (const auto& q : b.twos)
    for (const auto& a : b.twos) {
      auto [mq, gq] = parse(q.id);
      auto [ma, ga] = parse(a.id);
      const std::string sum = d.add.at({mq, ma});
      if (gq == ga) b.vcomp2[{q.id, a.id}] = two_id(sum, gq);
      b.hcomp2[{q.id, a.id}] = two_id(sum, d.mult.at({gq, ga}));
    }
  for (const auto& k : d.group)
    for (const auto& h : d.group)
      for (const auto& g : d.group) {
        const std::string khg = d.mult.at({d.mult.at({k, h}), g});
        b.assoc[{k, h, g}] = two_id(d.omega.at({k, h, g}), khg);
      }
  for (const auto& g : d.group) {
    b.lunit[g] = two_id(d.zero, g);
    b.runit[g] = two_id(d.zero, g);
  }
  return b;
}

Bicategory z2_cocycle_bicategory() {
  CocycleData d;
  d.group = {"e", "s"};
  d.unit = "e";
  d.mult = {{{"e", "e"}, "e"},
            {{"e", "s"}, "s"},
            {{"s", "e"}, "s"},
            {{"s", "s"}, "e"}};
  d.module = {"0", "1"};
  d.zero = "0";
  d.add = {{{"0", "0"}, "0"},
           {{"0", "1"}, "1"},
           {{"1", "0"}, "1"},
           {{"1", "1"}, "0"}};
  for (const auto& k : d.group)
    for (const auto& h : d.group)
      for (const auto& g : d.group)
        d.omega[{k, h, g}] =
            (k == "s" && h == "s" && g == "s") ? "1" : "0";
  return cocycle_bicategory(d);
}

Bicategory free_strict_bicat(const core::GlobularSet& x, std::size_t budget) {
  using core::LabelledDiagram;
  if (x.n > 2)
    throw std::invalid_argument(
        "free_strict_bicat: generating data has cells above dimension 2");

  std::map<std::string, LabelledDiagram> ones, twos;
  for (const auto& c : core::tx_enumerate(x, 1, budget))
    ones.emplace(core::tx_to_string(c), c);
  if (x.n >= 2)
    for (const auto& c : core::tx_enumerate(x, 2, budget))
      twos.emplace(core::tx_to_string(c), c);

  auto cell0_name = [&](const LabelledDiagram& c) {
    // A 0-dimensional labelled diagram is a single leaf.
    return c.root.anchor;
  };
  auto require = [](const std::map<std::string, LabelledDiagram>& pool,
                    const std::string& id) {
    if (!pool.count(id))
      throw std::invalid_argument(
          "free_strict_bicat: composite escapes the size budget (" + id +
          ")");
  };

  Bicategory b;
  if (!x.cells.empty()) b.objects = x.cells[0];
  for (const auto& [id, c] : ones)
    b.ones.push_back({id, cell0_name(core::tx_src(x, c)),
                      cell0_name(core::tx_tgt(x, c))});
  for (const auto& [id, c] : twos)
    b.twos.push_back({id, core::tx_to_string(core::tx_src(x, c)),
                      core::tx_to_string(core::tx_tgt(x, c))});

  for (const auto& o : b.objects) {
    const std::string id =
        core::tx_to_string(core::tx_identity(core::tx_generator(x, o)));
    require(ones, id);
    b.id1[o] = id;
  }
  for (const auto& [id, c] : ones) {
    const std::string two = core::tx_to_string(core::tx_identity(c));
    require(twos, two);
    b.id2[id] = two;
  }
  for (const auto& [gid, g] : ones)
    for (const auto& [fid, f] : ones) {
      const auto& gone = b.one(gid);
      const auto& fone = b.one(fid);
      if (fone.cod != gone.dom) continue;
      const std::string gf = core::tx_to_string(core::tx_compose(x, g, f, 0));
      require(ones, gf);
      b.hcomp1[{gid, fid}] = gf;
    }
  for (const auto& [qid, q] : twos)
    for (const auto& [aid, a] : twos) {
      const auto& qtwo = b.two(qid);
      const auto& atwo = b.two(aid);
      if (atwo.cod == qtwo.dom) {
        const std::string qa =
            core::tx_to_string(core::tx_compose(x, q, a, 1));
        require(twos, qa);
        b.vcomp2[{qid, aid}] = qa;
      }
      if (b.one(atwo.dom).cod == b.one(qtwo.dom).dom) {
        const std::string qa =
            core::tx_to_string(core::tx_compose(x, q, a, 0));
        require(twos, qa);
        b.hcomp2[{qid, aid}] = qa;
      }
    }
  complete_strict_constraints(b);
  return b;
}

}  // namespace globcat::bicat
