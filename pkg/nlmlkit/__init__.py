"""nlmlkit: English sentences to NLML markup, sentence models and a flat NLML store"""
