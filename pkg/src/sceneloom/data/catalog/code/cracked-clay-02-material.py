"""Cracked Clay 02 Material generator (Materials)."""

PARAMS = {
    "size": 0.532,
    "detail": 4,
    "roughness": 0.634,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
