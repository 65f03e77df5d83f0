#pragma once

#include "cutcell/analysis.hpp"
#include "cutcell/assembly.hpp"
#include "cutcell/mesh.hpp"
#include "cutcell/oracle.hpp"
#include "cutcell/profile.hpp"
#include "cutcell/report_json.hpp"
#include "cutcell/snapshot.hpp"
#include "cutcell/stepping.hpp"
