"""River Silt 06 Material generator (Materials)."""

PARAMS = {
    "size": 0.584,
    "detail": 3,
    "roughness": 0.308,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
