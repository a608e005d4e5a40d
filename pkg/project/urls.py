from django.contrib import admin
from django.urls import path

# Only the admin is routed: it lists the recorded runs.
urlpatterns = [
    path("admin/", admin.site.urls),
]
