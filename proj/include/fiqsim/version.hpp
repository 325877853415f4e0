#pragma once

#define FIQSIM_VERSION "0.1.0"
