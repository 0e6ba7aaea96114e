#pragma once
// Small strict 2-categories shared by the unit and acceptance tests.  Every
// builder tabulates composition explicitly and then fills the constraint
// cells with complete_strict_constraints, so each fixture is strict on the
// nose and passes bicat_validate.

#include "bicat/bicat.hpp"

namespace fixtures {

using globcat::bicat::Bicategory;

// One object and its identity data only.
inline Bicategory strict_point() {
  Bicategory b;
  b.objects = {"x"};
  b.ones = {{"1x", "x", "x"}};
  b.twos = {{"i1x", "1x", "1x"}};
  b.id1 = {{"x", "1x"}};
  b.id2 = {{"1x", "i1x"}};
  b.hcomp1 = {{{"1x", "1x"}, "1x"}};
  b.vcomp2 = {{{"i1x", "i1x"}, "i1x"}};
  b.hcomp2 = {{{"i1x", "i1x"}, "i1x"}};
  globcat::bicat::complete_strict_constraints(b);
  return b;
}

// Two objects and one non-identity 1-cell f : x -> y.
inline Bicategory strict_walking_arrow() {
  Bicategory b;
  b.objects = {"x", "y"};
  b.ones = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"f", "x", "y"}};
  b.twos = {{"i1x", "1x", "1x"}, {"i1y", "1y", "1y"}, {"if", "f", "f"}};
  b.id1 = {{"x", "1x"}, {"y", "1y"}};
  b.id2 = {{"1x", "i1x"}, {"1y", "i1y"}, {"f", "if"}};
  b.hcomp1 = {{{"1x", "1x"}, "1x"},
              {{"1y", "1y"}, "1y"},
              {{"f", "1x"}, "f"},
              {{"1y", "f"}, "f"}};
  b.vcomp2 = {{{"i1x", "i1x"}, "i1x"},
              {{"i1y", "i1y"}, "i1y"},
              {{"if", "if"}, "if"}};
  b.hcomp2 = {{{"i1x", "i1x"}, "i1x"},
              {{"i1y", "i1y"}, "i1y"},
              {{"if", "i1x"}, "if"},
              {{"i1y", "if"}, "if"}};
  globcat::bicat::complete_strict_constraints(b);
  return b;
}

// Two parallel non-identity 1-cells with no 2-cell between them.
inline Bicategory strict_parallel_ones() {
  Bicategory b;
  b.objects = {"x", "y"};
  b.ones = {{"1x", "x", "x"},
            {"1y", "y", "y"},
            {"f", "x", "y"},
            {"g", "x", "y"}};
  b.twos = {{"i1x", "1x", "1x"},
            {"i1y", "1y", "1y"},
            {"if", "f", "f"},
            {"ig", "g", "g"}};
  b.id1 = {{"x", "1x"}, {"y", "1y"}};
  b.id2 = {{"1x", "i1x"}, {"1y", "i1y"}, {"f", "if"}, {"g", "ig"}};
  b.hcomp1 = {{{"1x", "1x"}, "1x"}, {{"1y", "1y"}, "1y"},
              {{"f", "1x"}, "f"},   {{"g", "1x"}, "g"},
              {{"1y", "f"}, "f"},   {{"1y", "g"}, "g"}};
  b.vcomp2 = {{{"i1x", "i1x"}, "i1x"},
              {{"i1y", "i1y"}, "i1y"},
              {{"if", "if"}, "if"},
              {{"ig", "ig"}, "ig"}};
  b.hcomp2 = {{{"i1x", "i1x"}, "i1x"}, {{"i1y", "i1y"}, "i1y"},
              {{"if", "i1x"}, "if"},   {{"ig", "i1x"}, "ig"},
              {{"i1y", "if"}, "if"},   {{"i1y", "ig"}, "ig"}};
  globcat::bicat::complete_strict_constraints(b);
  return b;
}

// The walking 2-cell: gam : f => g between parallel 1-cells x -> y.
inline Bicategory strict_walking_two_cell() {
  Bicategory b = strict_parallel_ones();
  b.twos.push_back({"gam", "f", "g"});
  b.vcomp2[{"gam", "if"}] = "gam";
  b.vcomp2[{"ig", "gam"}] = "gam";
  b.hcomp2[{"gam", "i1x"}] = "gam";
  b.hcomp2[{"i1y", "gam"}] = "gam";
  globcat::bicat::complete_strict_constraints(b);
  return b;
}

// The group of order two as 1-cells on a single object; 2-cells discrete.
inline Bicategory strict_z2_one_object() {
  Bicategory b;
  b.objects = {"x"};
  b.ones = {{"1x", "x", "x"}, {"s", "x", "x"}};
  b.twos = {{"i1x", "1x", "1x"}, {"is", "s", "s"}};
  b.id1 = {{"x", "1x"}};
  b.id2 = {{"1x", "i1x"}, {"s", "is"}};
  b.hcomp1 = {{{"1x", "1x"}, "1x"},
              {{"s", "1x"}, "s"},
              {{"1x", "s"}, "s"},
              {{"s", "s"}, "1x"}};
  b.vcomp2 = {{{"i1x", "i1x"}, "i1x"}, {{"is", "is"}, "is"}};
  b.hcomp2 = {{{"i1x", "i1x"}, "i1x"},
              {{"is", "i1x"}, "is"},
              {{"i1x", "is"}, "is"},
              {{"is", "is"}, "i1x"}};
  globcat::bicat::complete_strict_constraints(b);
  return b;
}

// The group of order two as 2-cells on a single identity 1-cell; both
// compositions agree by the interchange law.
inline Bicategory strict_z2_two_cells() {
  Bicategory b;
  b.objects = {"x"};
  b.ones = {{"1x", "x", "x"}};
  b.twos = {{"i1x", "1x", "1x"}, {"u", "1x", "1x"}};
  b.id1 = {{"x", "1x"}};
  b.id2 = {{"1x", "i1x"}};
  b.hcomp1 = {{{"1x", "1x"}, "1x"}};
  b.vcomp2 = {{{"i1x", "i1x"}, "i1x"},
              {{"u", "i1x"}, "u"},
              {{"i1x", "u"}, "u"},
              {{"u", "u"}, "i1x"}};
  b.hcomp2 = {{{"i1x", "i1x"}, "i1x"},
              {{"u", "i1x"}, "u"},
              {{"i1x", "u"}, "u"},
              {{"u", "u"}, "i1x"}};
  globcat::bicat::complete_strict_constraints(b);
  return b;
}

}  // namespace fixtures
