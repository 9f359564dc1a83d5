#pragma once

#include "tsing/arc_body.hpp"
#include "tsing/body.hpp"
#include "tsing/chords.hpp"
#include "tsing/error.hpp"
#include "tsing/fuzz.hpp"
#include "tsing/gallery.hpp"
#include "tsing/geometry.hpp"
#include "tsing/intersection.hpp"
#include "tsing/json_io.hpp"
#include "tsing/oracle.hpp"
#include "tsing/random.hpp"
#include "tsing/svg.hpp"
