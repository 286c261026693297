"""nlmlkit source package"""
