namespace gamma { int helper_value(); }
