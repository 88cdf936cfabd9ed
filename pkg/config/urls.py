"""
URL configuration for the tiling stabilizer project.
"""
from django.urls import path, include

urlpatterns = [
    # API URLs
    path('api/tilings/', include('apps.tilings.urls')),
    path('api/stabilizer/', include('apps.stabilizer.urls')),
]
