namespace gamma { struct Theme { int accent; }; }
