namespace beta { struct Variant { int kind; }; }
