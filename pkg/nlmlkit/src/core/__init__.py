"""Grammar, NLML codec, lexicon and sentence object model"""
