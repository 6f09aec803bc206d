# keeps tests/ importable for the shared _props helpers
