#pragma once

#include "piforms/catalog/render.hpp"
#include "piforms/engine/verify.hpp"
#include "piforms/hyperterm/identities.hpp"
