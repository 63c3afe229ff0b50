#pragma once

#include <g3ss/cartier.hpp>
#include <g3ss/cm_family.hpp>
#include <g3ss/curve.hpp>
#include <g3ss/errors.hpp>
#include <g3ss/field.hpp>
#include <g3ss/json_io.hpp>
#include <g3ss/poly.hpp>
#include <g3ss/search.hpp>
#include <g3ss/touchpoint.hpp>
#include <g3ss/zeta.hpp>
