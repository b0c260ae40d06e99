#pragma once

#include "nearspace/dickson_nearfield.hpp"
#include "nearspace/error.hpp"
#include "nearspace/finite_field.hpp"
#include "nearspace/gen_engine.hpp"
#include "nearspace/io.hpp"
#include "nearspace/oracle.hpp"
#include "nearspace/span_engine.hpp"
#include "nearspace/vector_space.hpp"
