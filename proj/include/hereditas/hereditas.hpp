#pragma once

#include "hereditas/integer.hpp"
#include "hereditas/zlinalg.hpp"
#include "hereditas/ring.hpp"
#include "hereditas/matrix.hpp"
#include "hereditas/linear.hpp"
#include "hereditas/abgroup.hpp"
#include "hereditas/fpmod.hpp"
#include "hereditas/matcat.hpp"
#include "hereditas/homdual.hpp"
#include "hereditas/torsionlab.hpp"
